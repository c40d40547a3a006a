#pragma once

// Published invariants of individual Eschenburg spaces, used as oracle values.
// p1 is printed in [0, r), s and sigma as symmetric representatives.

#include <array>
#include <string>
#include <vector>

#include "eschenburg/space.hpp"

namespace tables {

struct Row {
  std::array<long long, 6> v;
  long long r, s, sigma, p1;
  bool cond_c;
  const char* s22;
  const char* s2;

  eschenburg::ParameterVector pv() const { return eschenburg::make_vector(v[0], v[1], v[2], v[3], v[4], v[5]); }
};

// Pairs that are homotopy equivalent but not tangentially so (rows 0-11, in
// pairs), then tangentially equivalent but not homeomorphic (rows 12-25).
inline const std::vector<Row>& phenomena() {
  static const std::vector<Row> rows = {
      {{8, 7, -5, 6, 4, 0}, 43, -21, 1, 13, true, "1/6", "-59/516"},
      {{21, 21, -2, 20, 20, 0}, 43, -21, 1, 26, true, "1/6", "55/516"},
      {{12, 10, -8, 9, 5, 0}, 101, -50, -1, 21, true, "1/6", "565/1212"},
      {{50, 50, -2, 49, 49, 0}, 101, -50, -1, 55, true, "1/6", "-125/1212"},
      {{19, 17, -7, 16, 13, 0}, 137, -68, -1, 23, true, "1/6", "-743/1644"},
      {{68, 68, -2, 67, 67, 0}, 137, -68, -1, 73, true, "1/6", "241/1644"},
      {{30, 26, -6, 25, 25, 0}, 181, -26, -1, 164, true, "-1/6", "-193/2172"},
      {{16, 16, -10, 13, 9, 0}, 181, 26, 1, 85, true, "1/6", "-443/2172"},
      {{15, 14, -11, 12, 6, 0}, 181, -43, 0, 35, true, "0", "-55/181"},
      {{45, 43, -4, 42, 42, 0}, 181, -43, 0, 89, true, "0", "36/181"},
      {{16, 13, -11, 12, 6, 0}, 183, -91, 0, 33, true, "-1/6", "-991/2196"},
      {{91, 91, -2, 90, 90, 0}, 183, -91, 0, 96, true, "-1/6", "413/2196"},
      {{58, 54, -34, 39, 39, 0}, 2197, 1032, 0, 845, true, "1/2", "1147/8788"},
      {{45, 41, -47, 39, 0, 0}, 2197, 1032, 0, 845, true, "1/2", "-3247/8788"},
      {{81, 69, -84, 56, 10, 0}, 7571, 74, 0, 5352, true, "1/2", "-9219/30284"},
      {{108, 63, -69, 56, 46, 0}, 7571, 74, 0, 5352, true, "1/2", "5923/30284"},
      {{88, 61, -107, 30, 12, 0}, 10935, -5179, 0, 1368, true, "-1/6", "55529/131220"},
      {{77, 77, -106, 30, 18, 0}, 10935, 5179, 0, 1368, true, "1/6", "-11789/131220"},
      {{79, 58, -131, 6, 0, 0}, 13365, -1183, 0, 72, true, "1/3", "-3794/8019"},
      {{92, 47, -127, 6, 6, 0}, 13365, 1183, 0, 72, true, "-1/3", "-1552/8019"},
      {{115, 79, -116, 72, 6, 0}, 13851, 1184, 0, 9576, true, "-1/6", "-77167/166212"},
      {{128, 107, -97, 72, 66, 0}, 13851, -1184, 0, 9576, true, "1/6", "-61343/166212"},
      {{1112, 1111, -13, 1110, 1100, 0}, 14467, 2246, -1, 11744, true, "-1/6", "68945/173604"},
      {{127, 103, -106, 88, 36, 0}, 14467, -2246, 1, 11744, true, "1/6", "17857/173604"},
      {{188, 176, -82, 145, 137, 0}, 16625, 3341, 0, 6608, true, "1/2", "-25007/66500"},
      {{176, 164, -94, 163, 83, 0}, 16625, 3341, 0, 6608, true, "1/2", "8243/66500"},
  };
  return rows;
}

// M0 .. M8.
inline const std::vector<Row>& examples() {
  static const std::vector<Row> rows = {
      {{35, 21, -34, 12, 10, 0}, 1289, 499, 1, 248, false, "", ""},
      {{440, 168, -320, 159, 129, 0}, 141151, -58968, 0, 42822, true, "0", "-35047/141151"},
      {{400, 168, -352, 165, 51, 0}, 141151, -58968, 0, 42822, false, "", ""},
      {{410, 259, -457, 192, 20, 0}, 203383, -79707, -1, 66848, true, "-1/6", "614891/2440596"},
      {{548, 497, -335, 374, 336, 0}, 203383, -79707, -1, 50833, true, "-1/6", "-621835/2440596"},
      {{370, 287, -457, 126, 74, 0}, 203383, -79707, -1, 24056, true, "-1/6", "404657/2440596"},
      {{610, 491, -325, 462, 314, 0}, 203383, -79707, -1, 130561, true, "-1/6", "123017/2440596"},
      {{650, 491, -305, 432, 404, 0}, 203383, -79707, -1, 147241, true, "-1/6", "659411/2440596"},
      {{548, 469, -355, 432, 230, 0}, 203383, -79707, -1, 76945, true, "-1/6", "-947995/2440596"},
  };
  return rows;
}

inline std::vector<Row> all_rows() {
  std::vector<Row> out = phenomena();
  out.insert(out.end(), examples().begin(), examples().end());
  return out;
}

}  // namespace tables

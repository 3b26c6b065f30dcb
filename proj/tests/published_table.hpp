#ifndef ICVP_TESTS_PUBLISHED_TABLE_HPP
#define ICVP_TESTS_PUBLISHED_TABLE_HPP

#include <vector>

// Published coefficient lists of P_1 .. P_13, constant term first.
inline const std::vector<std::vector<long>>& published_polynomials() {
  static const std::vector<std::vector<long>> table = {
      /* P_1 */ {1},
      /* P_2 */ {1},
      /* P_3 */ {1, 0, 1},
      /* P_4 */ {1, 0, 2, 1},
      /* P_5 */ {1, 0, 3, 2, 2, 1, 2},
      /* P_6 */ {1, 0, 4, 3, 5, 5, 6, 5, 4, 1},
      /* P_7 */ {1, 0, 5, 4, 9, 11, 15, 15, 20, 13, 12, 9, 9, 1},
      /* P_8 */ {1, 0, 6, 5, 14, 19, 29, 35, 50, 51, 55, 55, 58, 43, 38, 30, 16, 5},
      /* P_9 */ {1, 0, 7, 6, 20, 29, 49, 67, 103, 123, 160, 178, 213, 212, 229, 215, 202, 162, 137, 109, 83, 35},
      /* P_10 */ {1, 0, 8, 7, 27, 41, 76, 114, 186, 248, 354, 445, 569, 666, 797, 867, 944, 968, 972, 938, 888, 767, 624, 539, 420, 277, 138},
      /* P_11 */ {1, 0, 9, 8, 35, 55, 111, 179, 308, 446, 683, 931, 1284, 1639, 2131, 2554, 3068, 3516, 3978, 4299, 4620, 4722, 4738, 4655, 4443, 4047, 3552, 2937, 2514, 2029, 1484, 873, 265},
      /* P_12 */ {1, 0, 10, 9, 44, 71, 155, 265, 479, 742, 1202, 1749, 2561, 3511, 4828, 6255, 8049, 9969, 12172, 14362, 16721, 18888, 20965, 22755, 24178, 25133, 25498, 25195, 24670, 23456, 21772, 19414, 16711, 14123, 12023, 9482, 6833, 4006, 1317},
      /* P_13 */ {1, 0, 11, 10, 54, 89, 209, 375, 710, 1165, 1980, 3043, 4692, 6807, 9838, 13505, 18404, 24159, 31296, 39361, 48823, 58981, 70278, 81886, 93869, 105612, 116901, 126688, 135618, 142267, 147027, 148755, 147909, 144539, 139430, 131305, 120931, 108095, 93604, 80199, 68481, 55663, 42067, 27881, 13597},
  };
  return table;
}

#endif  // ICVP_TESTS_PUBLISHED_TABLE_HPP

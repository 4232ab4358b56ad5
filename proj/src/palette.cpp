#include "polybranch/fractal.hpp"

namespace polybranch {

const std::array<Rgb, 256>& palette() {
  // Piecewise-linear through ten anchors from (68, 1, 84) to (253, 231, 37);
  // green nudged up where rounding would have flattened the luminance.
  static constexpr std::array<Rgb, 256> kTable{{
      {68, 1, 84}, {68, 2, 85}, {68, 4, 87}, {68, 5, 88},
      {69, 7, 89}, {69, 8, 90}, {69, 9, 92}, {69, 11, 93},
      {69, 12, 94}, {69, 13, 95}, {69, 15, 97}, {70, 16, 98},
      {70, 18, 99}, {70, 19, 101}, {70, 20, 102}, {70, 22, 103},
      {70, 23, 104}, {70, 24, 106}, {71, 26, 107}, {71, 27, 108},
      {71, 29, 109}, {71, 30, 111}, {71, 31, 112}, {71, 33, 113},
      {71, 34, 114}, {72, 35, 116}, {72, 37, 117}, {72, 38, 118},
      {72, 40, 120}, {72, 41, 120}, {71, 42, 121}, {71, 43, 122},
      {71, 44, 122}, {70, 46, 123}, {70, 47, 123}, {70, 48, 124},
      {69, 49, 125}, {69, 50, 125}, {69, 52, 126}, {68, 53, 126},
      {68, 54, 127}, {68, 55, 128}, {67, 56, 128}, {67, 58, 129},
      {66, 59, 129}, {66, 60, 130}, {66, 61, 131}, {65, 62, 131},
      {65, 64, 132}, {65, 65, 132}, {64, 66, 133}, {64, 67, 134},
      {64, 68, 134}, {63, 70, 135}, {63, 71, 135}, {63, 72, 136},
      {62, 73, 137}, {62, 74, 137}, {61, 75, 137}, {61, 76, 137},
      {60, 78, 138}, {60, 79, 138}, {60, 80, 138}, {59, 81, 138},
      {59, 82, 138}, {58, 83, 138}, {58, 84, 139}, {57, 85, 139},
      {57, 86, 139}, {56, 87, 139}, {56, 88, 139}, {55, 89, 140},
      {55, 90, 140}, {55, 91, 140}, {54, 92, 140}, {54, 93, 140},
      {53, 94, 140}, {53, 96, 141}, {52, 97, 141}, {52, 98, 141},
      {51, 99, 141}, {51, 100, 141}, {50, 101, 141}, {50, 102, 142},
      {49, 103, 142}, {49, 104, 142}, {49, 105, 142}, {48, 106, 142},
      {48, 107, 142}, {47, 108, 142}, {47, 109, 142}, {47, 110, 142},
      {46, 111, 142}, {46, 112, 142}, {46, 113, 142}, {45, 114, 142},
      {45, 115, 142}, {44, 116, 142}, {44, 117, 142}, {44, 118, 142},
      {43, 119, 142}, {43, 120, 142}, {42, 121, 142}, {42, 122, 142},
      {42, 123, 142}, {41, 124, 142}, {41, 125, 142}, {40, 126, 142},
      {40, 127, 142}, {40, 128, 142}, {39, 129, 142}, {39, 130, 142},
      {39, 131, 142}, {38, 132, 142}, {38, 133, 142}, {38, 134, 142},
      {37, 135, 142}, {37, 136, 141}, {37, 137, 141}, {37, 138, 141},
      {36, 139, 141}, {36, 140, 141}, {36, 141, 140}, {36, 142, 140},
      {35, 143, 140}, {35, 144, 140}, {35, 145, 140}, {35, 146, 140},
      {34, 147, 139}, {34, 148, 139}, {34, 149, 139}, {34, 150, 139},
      {33, 151, 139}, {33, 152, 139}, {33, 153, 138}, {33, 154, 138},
      {32, 155, 138}, {32, 156, 138}, {32, 157, 138}, {32, 158, 137},
      {31, 159, 137}, {31, 160, 137}, {31, 161, 137}, {32, 161, 136},
      {33, 161, 136}, {34, 161, 135}, {34, 162, 135}, {35, 163, 134},
      {36, 164, 133}, {37, 164, 133}, {37, 165, 132}, {38, 166, 132},
      {39, 167, 131}, {40, 168, 131}, {41, 169, 130}, {41, 170, 129},
      {42, 171, 129}, {43, 172, 128}, {44, 172, 128}, {44, 173, 127},
      {45, 174, 127}, {46, 175, 126}, {47, 176, 126}, {48, 177, 125},
      {48, 178, 124}, {49, 179, 124}, {50, 179, 123}, {51, 180, 123},
      {51, 181, 122}, {52, 182, 122}, {53, 183, 121}, {55, 184, 120},
      {57, 185, 119}, {59, 185, 118}, {61, 186, 116}, {63, 187, 115},
      {65, 188, 114}, {67, 188, 113}, {69, 189, 112}, {71, 190, 111},
      {73, 191, 110}, {75, 192, 109}, {77, 192, 107}, {79, 193, 106},
      {81, 194, 105}, {83, 195, 104}, {85, 195, 103}, {87, 196, 102},
      {89, 197, 101}, {91, 198, 100}, {93, 199, 98}, {95, 199, 97},
      {96, 200, 96}, {98, 201, 95}, {100, 202, 94}, {102, 202, 93},
      {104, 203, 92}, {106, 204, 91}, {108, 205, 89}, {111, 205, 88},
      {113, 206, 86}, {116, 207, 85}, {118, 207, 83}, {121, 208, 82},
      {123, 208, 80}, {126, 209, 78}, {128, 210, 77}, {131, 210, 75},
      {133, 211, 74}, {136, 211, 72}, {138, 212, 70}, {141, 213, 69},
      {143, 213, 67}, {146, 214, 66}, {148, 214, 64}, {151, 215, 63},
      {153, 216, 61}, {156, 216, 59}, {158, 217, 58}, {161, 217, 56},
      {163, 218, 55}, {166, 219, 53}, {168, 219, 51}, {171, 220, 50},
      {173, 220, 48}, {176, 221, 47}, {178, 222, 45}, {181, 222, 44},
      {183, 222, 44}, {186, 223, 43}, {189, 223, 43}, {191, 223, 43},
      {194, 224, 43}, {196, 224, 42}, {199, 224, 42}, {201, 225, 42},
      {204, 225, 42}, {207, 225, 41}, {209, 226, 41}, {212, 226, 41},
      {214, 226, 41}, {217, 227, 40}, {220, 227, 40}, {222, 227, 40},
      {225, 228, 40}, {227, 228, 39}, {230, 228, 39}, {232, 228, 39},
      {235, 229, 39}, {238, 229, 38}, {240, 229, 38}, {243, 230, 38},
      {245, 230, 38}, {248, 230, 37}, {250, 231, 37}, {253, 231, 37},
  }};
  return kTable;
}

}  // namespace polybranch

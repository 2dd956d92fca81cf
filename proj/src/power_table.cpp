#include "tracecert/verifier.hpp"

namespace tracecert {

// Entry of U^k at (row, col) for k = 1..4, as polynomials in n with ascending
// coefficients. Each row/column pair stands for its whole S_n orbit.
const std::vector<PowerPattern>& power_table() {
  static const std::vector<PowerPattern> table = {
    {"({1,2,3},1)", "({1,2,3},1)", {{{24, 0, 0, 0, 0, 0, 0}, {-432, 1026, 216, 0, 0, 0, 0}, {0, 9828, -43254, 44496, 2160, 0, 0}, {0, 0, -173664, 1093824, -2246778, 1506276, 22032}}}},
    {"({1,2,3},1)", "({1,2,3},2)", {{{18, 0, 0, 0, 0, 0, 0}, {-432, 1035, 198, 0, 0, 0, 0}, {0, 9828, -43281, 44604, 2052, 0, 0}, {0, 0, -173664, 1093986, -2247669, 1507896, 21060}}}},
    {"({1,2,3},1)", "({1,2,4},1)", {{{18, 0, 0, 0, 0, 0, 0}, {-432, 1071, 162, 0, 0, 0, 0}, {0, 9828, -43605, 45360, 1620, 0, 0}, {0, 0, -173664, 1096578, -2257065, 1519236, 16524}}}},
    {"({1,2,3},1)", "({1,2,4},2)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1080, 144, 0, 0, 0, 0}, {0, 9828, -43632, 45468, 1512, 0, 0}, {0, 0, -173664, 1096740, -2257956, 1520856, 15552}}}},
    {"({1,2,3},1)", "({1,2,4},4)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1089, 126, 0, 0, 0, 0}, {0, 9828, -43713, 45738, 1296, 0, 0}, {0, 0, -173664, 1097388, -2260953, 1525392, 13284}}}},
    {"({1,2,3},3)", "({1,2,4},4)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1098, 108, 0, 0, 0, 0}, {0, 9828, -43794, 46008, 1080, 0, 0}, {0, 0, -173664, 1098036, -2263950, 1529928, 11016}}}},
    {"({1,2,3},1)", "({1,4,5},1)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1116, 108, 0, 0, 0, 0}, {0, 9828, -43956, 46224, 1080, 0, 0}, {0, 0, -173664, 1099332, -2267352, 1532196, 11016}}}},
    {"({1,2,3},1)", "({1,4,5},4)", {{{6, 0, 0, 0, 0, 0, 0}, {-432, 1134, 72, 0, 0, 0, 0}, {0, 9828, -44064, 46602, 756, 0, 0}, {0, 0, -173664, 1100142, -2271240, 1538352, 7776}}}},
    {"({1,2,3},2)", "({1,4,5},4)", {{{6, 0, 0, 0, 0, 0, 0}, {-432, 1143, 54, 0, 0, 0, 0}, {0, 9828, -44145, 46872, 540, 0, 0}, {0, 0, -173664, 1100790, -2274237, 1542888, 5508}}}},
    {"({1,2,3},1)", "({4,5,6},4)", {{{0, 0, 0, 0, 0, 0, 0}, {-432, 1188, 0, 0, 0, 0, 0}, {0, 9828, -44496, 47736, 0, 0, 0}, {0, 0, -173664, 1103544, -2284524, 1555848, 0}}}},
    {"(1,2)", "(1,2)", {{{36, 0, 0, 0, 0, 0, 0}, {-432, 918, 360, 0, 0, 0, 0}, {0, 9828, -42390, 42228, 3672, 0, 0}, {0, 0, -173664, 1087020, -2220210, 1471284, 37584}}}},
    {"(1,2)", "(1,3)", {{{30, 0, 0, 0, 0, 0, 0}, {-432, 963, 306, 0, 0, 0, 0}, {0, 9828, -42741, 43092, 3132, 0, 0}, {0, 0, -173664, 1089774, -2230497, 1484244, 32076}}}},
    {"(1,2)", "(2,1)", {{{24, 0, 0, 0, 0, 0, 0}, {-432, 990, 252, 0, 0, 0, 0}, {0, 9828, -42930, 43740, 2592, 0, 0}, {0, 0, -173664, 1091232, -2237382, 1494936, 26568}}}},
    {"(1,2)", "(2,3)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1089, 126, 0, 0, 0, 0}, {0, 9828, -43713, 45738, 1296, 0, 0}, {0, 0, -173664, 1097388, -2260953, 1525392, 13284}}}},
    {"(1,2)", "(3,1)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1089, 126, 0, 0, 0, 0}, {0, 9828, -43713, 45738, 1296, 0, 0}, {0, 0, -173664, 1097388, -2260953, 1525392, 13284}}}},
    {"(1,2)", "(3,2)", {{{6, 0, 0, 0, 0, 0, 0}, {-432, 1143, 54, 0, 0, 0, 0}, {0, 9828, -44145, 46872, 540, 0, 0}, {0, 0, -173664, 1100790, -2274237, 1542888, 5508}}}},
    {"(1,2)", "(3,4)", {{{0, 0, 0, 0, 0, 0, 0}, {-432, 1188, 0, 0, 0, 0, 0}, {0, 9828, -44496, 47736, 0, 0, 0}, {0, 0, -173664, 1103544, -2284524, 1555848, 0}}}},
    {"(1^,2^)", "(1^,1^)", {{{9, 0, 0, 0, 0, 0, 0}, {-108, 225, 90, 0, 0, 0, 0}, {0, 2457, -10557, 10503, 918, 0, 0}, {0, 0, -43416, 271431, -554202, 367254, 9396}}}},
    {"(1^,1^)", "(1^,2^)", {{{9, 0, 0, 0, 0, 0, 0}, {-108, 225, 90, 0, 0, 0, 0}, {0, 2457, -10557, 10503, 918, 0, 0}, {0, 0, -43416, 271431, -554202, 367254, 9396}}}},
    {"(1^,1^)", "(2^,2^)", {{{0, 0, 0, 0, 0, 0, 0}, {-108, 297, 0, 0, 0, 0, 0}, {0, 2457, -11124, 11934, 0, 0, 0}, {0, 0, -43416, 275886, -571131, 388962, 0}}}},
    {"(1^,1^)", "(2^,1^)", {{{6, 0, 0, 0, 0, 0, 0}, {-108, 252, 63, 0, 0, 0, 0}, {0, 2457, -10773, 10989, 648, 0, 0}, {0, 0, -43416, 273132, -560196, 374301, 6642}}}},
    {"(1^,1^)", "(2^,3^)", {{{0, 0, 0, 0, 0, 0, 0}, {-108, 297, 0, 0, 0, 0, 0}, {0, 2457, -11124, 11934, 0, 0, 0}, {0, 0, -43416, 275886, -571131, 388962, 0}}}},
    {"(1^,2^)", "(1^,2^)", {{{9, 0, 0, 0, 0, 0, 0}, {-108, 234, 81, 0, 0, 0, 0}, {0, 2457, -10638, 10692, 810, 0, 0}, {0, 0, -43416, 272079, -556551, 370089, 8262}}}},
    {"(1^,2^)", "(2^,1^)", {{{6, 0, 0, 0, 0, 0, 0}, {-108, 243, 72, 0, 0, 0, 0}, {0, 2457, -10692, 10800, 756, 0, 0}, {0, 0, -43416, 272484, -557847, 371466, 7776}}}},
    {"(1^,2^)", "(1^,3^)", {{{6, 0, 0, 0, 0, 0, 0}, {-108, 252, 54, 0, 0, 0, 0}, {0, 2457, -10773, 11070, 540, 0, 0}, {0, 0, -43416, 273132, -560844, 376002, 5508}}}},
    {"(1^,2^)", "(3^,1^)", {{{3, 0, 0, 0, 0, 0, 0}, {-108, 270, 36, 0, 0, 0, 0}, {0, 2457, -10908, 11367, 378, 0, 0}, {0, 0, -43416, 274185, -564489, 380214, 3888}}}},
    {"(1^,2^)", "(2^,3^)", {{{3, 0, 0, 0, 0, 0, 0}, {-108, 270, 36, 0, 0, 0, 0}, {0, 2457, -10908, 11367, 378, 0, 0}, {0, 0, -43416, 274185, -564489, 380214, 3888}}}},
    {"(1^,2^)", "(3^,2^)", {{{3, 0, 0, 0, 0, 0, 0}, {-108, 279, 27, 0, 0, 0, 0}, {0, 2457, -10989, 11556, 270, 0, 0}, {0, 0, -43416, 274833, -566838, 383049, 2754}}}},
    {"(1^,2^)", "(3^,4^)", {{{0, 0, 0, 0, 0, 0, 0}, {-108, 297, 0, 0, 0, 0, 0}, {0, 2457, -11124, 11934, 0, 0, 0}, {0, 0, -43416, 275886, -571131, 388962, 0}}}},
    {"({1,2,3},1)", "(1,2)", {{{24, 0, 0, 0, 0, 0, 0}, {-432, 1017, 234, 0, 0, 0, 0}, {0, 9828, -43173, 44226, 2376, 0, 0}, {0, 0, -173664, 1093176, -2243781, 1501740, 24300}}}},
    {"({1,2,3},2)", "(1,2)", {{{18, 0, 0, 0, 0, 0, 0}, {-432, 1035, 198, 0, 0, 0, 0}, {0, 9828, -43281, 44604, 2052, 0, 0}, {0, 0, -173664, 1093986, -2247669, 1507896, 21060}}}},
    {"({1,2,3},3)", "(1,2)", {{{18, 0, 0, 0, 0, 0, 0}, {-432, 1044, 180, 0, 0, 0, 0}, {0, 9828, -43362, 44874, 1836, 0, 0}, {0, 0, -173664, 1094634, -2250666, 1512432, 18792}}}},
    {"({1,2,3},1)", "(1,4)", {{{18, 0, 0, 0, 0, 0, 0}, {-432, 1062, 180, 0, 0, 0, 0}, {0, 9828, -43524, 45090, 1836, 0, 0}, {0, 0, -173664, 1095930, -2254068, 1514700, 18792}}}},
    {"({1,2,3},2)", "(1,4)", {{{12, 0, 0, 0, 0, 0, 0}, {-432, 1089, 126, 0, 0, 0, 0}, {0, 9828, -43713, 45738, 1296, 0, 0}, {0, 0, -173664, 1097388, -2260953, 1525392, 13284}}}},
    {"({1,2,3},1)", "(4,1)", {{{6, 0, 0, 0, 0, 0, 0}, {-432, 1134, 72, 0, 0, 0, 0}, {0, 9828, -44064, 46602, 756, 0, 0}, {0, 0, -173664, 1100142, -2271240, 1538352, 7776}}}},
    {"({1,2,3},2)", "(4,1)", {{{6, 0, 0, 0, 0, 0, 0}, {-432, 1143, 54, 0, 0, 0, 0}, {0, 9828, -44145, 46872, 540, 0, 0}, {0, 0, -173664, 1100790, -2274237, 1542888, 5508}}}},
    {"({1,2,3},1)", "(4,5)", {{{0, 0, 0, 0, 0, 0, 0}, {-432, 1188, 0, 0, 0, 0, 0}, {0, 9828, -44496, 47736, 0, 0, 0}, {0, 0, -173664, 1103544, -2284524, 1555848, 0}}}},
    {"({1,2,3},1)", "(1^,1^)", {{{12, 0, 0, 0, 0, 0, 0}, {-216, 504, 126, 0, 0, 0, 0}, {0, 4914, -21546, 21978, 1296, 0, 0}, {0, 0, -86832, 546264, -1120392, 748602, 13284}}}},
    {"({1,2,3},2)", "(1^,1^)", {{{9, 0, 0, 0, 0, 0, 0}, {-216, 522, 90, 0, 0, 0, 0}, {0, 4914, -21681, 22437, 918, 0, 0}, {0, 0, -86832, 547317, -1125333, 756216, 9396}}}},
    {"({1,2,3},1)", "(1^,2^)", {{{9, 0, 0, 0, 0, 0, 0}, {-216, 513, 108, 0, 0, 0, 0}, {0, 4914, -21600, 22167, 1134, 0, 0}, {0, 0, -86832, 546669, -1122336, 751680, 11664}}}},
    {"({1,2,3},2)", "(1^,2^)", {{{12, 0, 0, 0, 0, 0, 0}, {-216, 513, 108, 0, 0, 0, 0}, {0, 4914, -21627, 22248, 1080, 0, 0}, {0, 0, -86832, 546912, -1123389, 753138, 11016}}}},
    {"({1,2,3},3)", "(1^,2^)", {{{9, 0, 0, 0, 0, 0, 0}, {-216, 522, 90, 0, 0, 0, 0}, {0, 4914, -21681, 22437, 918, 0, 0}, {0, 0, -86832, 547317, -1125333, 756216, 9396}}}},
    {"({1,2,3},1)", "(1^,4^)", {{{6, 0, 0, 0, 0, 0, 0}, {-216, 540, 72, 0, 0, 0, 0}, {0, 4914, -21816, 22734, 756, 0, 0}, {0, 0, -86832, 548370, -1128978, 760428, 7776}}}},
    {"({1,2,3},2)", "(1^,4^)", {{{6, 0, 0, 0, 0, 0, 0}, {-216, 549, 54, 0, 0, 0, 0}, {0, 4914, -21897, 23004, 540, 0, 0}, {0, 0, -86832, 549018, -1131975, 764964, 5508}}}},
    {"({1,2,3},1)", "(4^,1^)", {{{6, 0, 0, 0, 0, 0, 0}, {-216, 558, 54, 0, 0, 0, 0}, {0, 4914, -21978, 23112, 540, 0, 0}, {0, 0, -86832, 549666, -1133676, 766098, 5508}}}},
    {"({1,2,3},2)", "(4^,1^)", {{{3, 0, 0, 0, 0, 0, 0}, {-216, 567, 36, 0, 0, 0, 0}, {0, 4914, -22032, 23301, 378, 0, 0}, {0, 0, -86832, 550071, -1135620, 769176, 3888}}}},
    {"({1,2,3},1)", "(4^,4^)", {{{0, 0, 0, 0, 0, 0, 0}, {-216, 594, 0, 0, 0, 0, 0}, {0, 4914, -22248, 23868, 0, 0, 0}, {0, 0, -86832, 551772, -1142262, 777924, 0}}}},
    {"({1,2,3},1)", "(4^,5^)", {{{0, 0, 0, 0, 0, 0, 0}, {-216, 594, 0, 0, 0, 0, 0}, {0, 4914, -22248, 23868, 0, 0, 0}, {0, 0, -86832, 551772, -1142262, 777924, 0}}}},
    {"(1,2)", "(1^,1^)", {{{21, 0, 0, 0, 0, 0, 0}, {-216, 432, 216, 0, 0, 0, 0}, {0, 4914, -20979, 20547, 2214, 0, 0}, {0, 0, -86832, 541809, -1103463, 726894, 22680}}}},
    {"(1,2)", "(1^,2^)", {{{15, 0, 0, 0, 0, 0, 0}, {-216, 468, 162, 0, 0, 0, 0}, {0, 4914, -21249, 21303, 1674, 0, 0}, {0, 0, -86832, 543915, -1112049, 738720, 17172}}}},
    {"(1,2)", "(1^,3^)", {{{12, 0, 0, 0, 0, 0, 0}, {-216, 495, 126, 0, 0, 0, 0}, {0, 4914, -21465, 21870, 1296, 0, 0}, {0, 0, -86832, 545616, -1118691, 747468, 13284}}}},
    {"(1,2)", "(2^,1^)", {{{15, 0, 0, 0, 0, 0, 0}, {-216, 486, 144, 0, 0, 0, 0}, {0, 4914, -21411, 21681, 1458, 0, 0}, {0, 0, -86832, 545211, -1116747, 744390, 14904}}}},
    {"(1,2)", "(2^,2^)", {{{9, 0, 0, 0, 0, 0, 0}, {-216, 522, 90, 0, 0, 0, 0}, {0, 4914, -21681, 22437, 918, 0, 0}, {0, 0, -86832, 547317, -1125333, 756216, 9396}}}},
    {"(1,2)", "(2^,3^)", {{{6, 0, 0, 0, 0, 0, 0}, {-216, 549, 54, 0, 0, 0, 0}, {0, 4914, -21897, 23004, 540, 0, 0}, {0, 0, -86832, 549018, -1131975, 764964, 5508}}}},
    {"(1,2)", "(3^,1^)", {{{9, 0, 0, 0, 0, 0, 0}, {-216, 531, 90, 0, 0, 0, 0}, {0, 4914, -21762, 22545, 918, 0, 0}, {0, 0, -86832, 547965, -1127034, 757350, 9396}}}},
    {"(1,2)", "(3^,2^)", {{{3, 0, 0, 0, 0, 0, 0}, {-216, 567, 36, 0, 0, 0, 0}, {0, 4914, -22032, 23301, 378, 0, 0}, {0, 0, -86832, 550071, -1135620, 769176, 3888}}}},
    {"(1,2)", "(3^,4^)", {{{0, 0, 0, 0, 0, 0, 0}, {-216, 594, 0, 0, 0, 0, 0}, {0, 4914, -22248, 23868, 0, 0, 0}, {0, 0, -86832, 551772, -1142262, 777924, 0}}}},
  };
  return table;
}

}  // namespace tracecert

"""Generated by tools/gen_wordbreak_data.py; do not edit.

Per-codepoint segmentation properties as half-open ranges:
VALUES[i] applies to code points in [STARTS[i], STARTS[i+1]).
"""

UNICODE_VERSION = "13.0.0"

# 2143 ranges
STARTS = (
    0, 10, 11, 13, 14, 32, 33, 34, 35, 39, 40, 44,
    45, 46, 47, 48, 58, 59, 60, 65, 91, 95, 96, 97,
    123, 127, 133, 134, 160, 170, 171, 173, 174, 178, 180, 181,
    182, 183, 184, 185, 186, 187, 188, 191, 192, 215, 216, 247,
    248, 706, 710, 722, 728, 734, 736, 741, 748, 749, 750, 751,
    768, 880, 885, 886, 888, 890, 894, 895, 896, 902, 903, 904,
    907, 908, 909, 910, 930, 931, 1014, 1015, 1154, 1155, 1162, 1328,
    1329, 1367, 1369, 1370, 1375, 1376, 1417, 1425, 1470, 1471, 1472, 1473,
    1475, 1476, 1478, 1479, 1480, 1488, 1515, 1519, 1523, 1524, 1525, 1536,
    1542, 1548, 1550, 1552, 1563, 1564, 1565, 1568, 1611, 1632, 1642, 1643,
    1644, 1645, 1646, 1648, 1649, 1748, 1749, 1750, 1757, 1758, 1759, 1765,
    1767, 1769, 1770, 1774, 1776, 1786, 1789, 1791, 1792, 1807, 1808, 1809,
    1810, 1840, 1867, 1869, 1958, 1969, 1970, 1984, 1994, 2027, 2036, 2038,
    2040, 2041, 2042, 2043, 2045, 2046, 2048, 2070, 2074, 2075, 2084, 2085,
    2088, 2089, 2094, 2112, 2137, 2140, 2144, 2155, 2208, 2229, 2230, 2248,
    2259, 2274, 2275, 2307, 2308, 2362, 2363, 2364, 2365, 2366, 2369, 2377,
    2381, 2382, 2384, 2385, 2392, 2402, 2404, 2406, 2416, 2417, 2433, 2434,
    2436, 2437, 2445, 2447, 2449, 2451, 2473, 2474, 2481, 2482, 2483, 2486,
    2490, 2492, 2493, 2494, 2497, 2501, 2503, 2505, 2507, 2509, 2510, 2511,
    2519, 2520, 2524, 2526, 2527, 2530, 2532, 2534, 2544, 2546, 2548, 2554,
    2556, 2557, 2558, 2559, 2561, 2563, 2564, 2565, 2571, 2575, 2577, 2579,
    2601, 2602, 2609, 2610, 2612, 2613, 2615, 2616, 2618, 2620, 2621, 2622,
    2625, 2627, 2631, 2633, 2635, 2638, 2641, 2642, 2649, 2653, 2654, 2655,
    2662, 2672, 2674, 2677, 2678, 2689, 2691, 2692, 2693, 2702, 2703, 2706,
    2707, 2729, 2730, 2737, 2738, 2740, 2741, 2746, 2748, 2749, 2750, 2753,
    2758, 2759, 2761, 2762, 2763, 2765, 2766, 2768, 2769, 2784, 2786, 2788,
    2790, 2800, 2809, 2810, 2816, 2817, 2818, 2820, 2821, 2829, 2831, 2833,
    2835, 2857, 2858, 2865, 2866, 2868, 2869, 2874, 2876, 2877, 2878, 2879,
    2880, 2881, 2885, 2887, 2889, 2891, 2893, 2894, 2901, 2903, 2904, 2908,
    2910, 2911, 2914, 2916, 2918, 2928, 2929, 2930, 2936, 2946, 2947, 2948,
    2949, 2955, 2958, 2961, 2962, 2966, 2969, 2971, 2972, 2973, 2974, 2976,
    2979, 2981, 2984, 2987, 2990, 3002, 3006, 3008, 3009, 3011, 3014, 3017,
    3018, 3021, 3022, 3024, 3025, 3031, 3032, 3046, 3056, 3059, 3072, 3073,
    3076, 3077, 3085, 3086, 3089, 3090, 3113, 3114, 3130, 3133, 3134, 3137,
    3141, 3142, 3145, 3146, 3150, 3157, 3159, 3160, 3163, 3168, 3170, 3172,
    3174, 3184, 3192, 3199, 3200, 3201, 3202, 3204, 3205, 3213, 3214, 3217,
    3218, 3241, 3242, 3252, 3253, 3258, 3260, 3261, 3262, 3263, 3264, 3269,
    3270, 3271, 3273, 3274, 3276, 3278, 3285, 3287, 3294, 3295, 3296, 3298,
    3300, 3302, 3312, 3313, 3315, 3328, 3330, 3332, 3341, 3342, 3345, 3346,
    3387, 3389, 3390, 3393, 3397, 3398, 3401, 3402, 3405, 3406, 3407, 3412,
    3415, 3416, 3423, 3426, 3428, 3430, 3440, 3449, 3450, 3456, 3457, 3458,
    3460, 3461, 3479, 3482, 3506, 3507, 3516, 3517, 3518, 3520, 3527, 3530,
    3531, 3535, 3538, 3541, 3542, 3543, 3544, 3552, 3558, 3568, 3570, 3572,
    3585, 3633, 3634, 3636, 3643, 3648, 3655, 3663, 3664, 3674, 3713, 3715,
    3716, 3717, 3718, 3723, 3724, 3748, 3749, 3750, 3751, 3761, 3762, 3764,
    3773, 3774, 3776, 3781, 3782, 3783, 3784, 3790, 3792, 3802, 3804, 3808,
    3840, 3841, 3864, 3866, 3872, 3882, 3892, 3893, 3894, 3895, 3896, 3897,
    3898, 3902, 3904, 3912, 3913, 3949, 3953, 3967, 3968, 3973, 3974, 3976,
    3981, 3992, 3993, 4029, 4038, 4039, 4096, 4139, 4141, 4145, 4146, 4152,
    4153, 4155, 4157, 4159, 4160, 4170, 4176, 4182, 4184, 4186, 4190, 4193,
    4194, 4197, 4199, 4206, 4209, 4213, 4226, 4227, 4229, 4231, 4237, 4238,
    4239, 4240, 4250, 4253, 4254, 4256, 4294, 4295, 4296, 4301, 4302, 4304,
    4347, 4348, 4352, 4448, 4520, 4608, 4681, 4682, 4686, 4688, 4695, 4696,
    4697, 4698, 4702, 4704, 4745, 4746, 4750, 4752, 4785, 4786, 4790, 4792,
    4799, 4800, 4801, 4802, 4806, 4808, 4823, 4824, 4881, 4882, 4886, 4888,
    4955, 4957, 4960, 4969, 4989, 4992, 5008, 5024, 5110, 5112, 5118, 5121,
    5741, 5743, 5760, 5761, 5787, 5792, 5867, 5870, 5881, 5888, 5901, 5902,
    5906, 5909, 5920, 5938, 5941, 5952, 5970, 5972, 5984, 5997, 5998, 6001,
    6002, 6004, 6016, 6068, 6070, 6071, 6078, 6086, 6087, 6089, 6100, 6103,
    6104, 6108, 6109, 6110, 6112, 6122, 6128, 6138, 6155, 6158, 6159, 6160,
    6170, 6176, 6265, 6272, 6277, 6279, 6313, 6314, 6315, 6320, 6390, 6400,
    6431, 6432, 6435, 6439, 6441, 6444, 6448, 6450, 6451, 6457, 6460, 6470,
    6480, 6510, 6512, 6517, 6528, 6572, 6576, 6602, 6608, 6618, 6619, 6656,
    6679, 6681, 6683, 6684, 6688, 6741, 6742, 6743, 6744, 6751, 6752, 6753,
    6754, 6755, 6757, 6765, 6771, 6781, 6783, 6784, 6794, 6800, 6810, 6823,
    6824, 6832, 6849, 6912, 6916, 6917, 6964, 6965, 6966, 6971, 6972, 6973,
    6978, 6979, 6981, 6988, 6992, 7002, 7019, 7028, 7040, 7042, 7043, 7073,
    7074, 7078, 7080, 7082, 7083, 7086, 7088, 7098, 7142, 7143, 7144, 7146,
    7149, 7150, 7151, 7154, 7156, 7168, 7204, 7212, 7220, 7222, 7224, 7232,
    7242, 7245, 7248, 7258, 7294, 7296, 7305, 7312, 7355, 7357, 7360, 7376,
    7379, 7380, 7393, 7394, 7401, 7405, 7406, 7412, 7413, 7415, 7416, 7418,
    7419, 7424, 7616, 7674, 7675, 7680, 7958, 7960, 7966, 7968, 8006, 8008,
    8014, 8016, 8024, 8025, 8026, 8027, 8028, 8029, 8030, 8031, 8062, 8064,
    8117, 8118, 8125, 8126, 8127, 8130, 8133, 8134, 8141, 8144, 8148, 8150,
    8156, 8160, 8173, 8178, 8181, 8182, 8189, 8192, 8199, 8200, 8203, 8204,
    8205, 8206, 8208, 8217, 8218, 8228, 8229, 8231, 8232, 8234, 8239, 8240,
    8255, 8257, 8260, 8261, 8276, 8277, 8287, 8288, 8293, 8294, 8304, 8305,
    8306, 8308, 8314, 8319, 8320, 8330, 8336, 8349, 8400, 8433, 8450, 8451,
    8455, 8456, 8458, 8468, 8469, 8470, 8473, 8478, 8484, 8485, 8486, 8487,
    8488, 8489, 8490, 8494, 8495, 8506, 8508, 8512, 8517, 8522, 8526, 8527,
    8528, 8544, 8585, 8586, 9312, 9372, 9450, 9472, 10102, 10132, 11264, 11311,
    11312, 11359, 11360, 11493, 11499, 11503, 11506, 11508, 11517, 11518, 11520, 11558,
    11559, 11560, 11565, 11566, 11568, 11624, 11631, 11632, 11647, 11648, 11671, 11680,
    11687, 11688, 11695, 11696, 11703, 11704, 11711, 11712, 11719, 11720, 11727, 11728,
    11735, 11736, 11743, 11744, 11776, 11823, 11824, 12288, 12289, 12293, 12296, 12321,
    12330, 12334, 12336, 12337, 12342, 12344, 12349, 12353, 12439, 12441, 12443, 12445,
    12448, 12449, 12539, 12540, 12544, 12549, 12592, 12593, 12687, 12690, 12694, 12704,
    12736, 12784, 12800, 12832, 12842, 12872, 12880, 12881, 12896, 12928, 12938, 12977,
    12992, 13008, 13055, 13056, 13144, 13312, 19904, 19968, 40957, 40960, 42125, 42192,
    42238, 42240, 42509, 42512, 42528, 42538, 42540, 42560, 42607, 42611, 42612, 42622,
    42623, 42654, 42656, 42736, 42738, 42760, 42775, 42784, 42786, 42889, 42891, 42944,
    42946, 42955, 42997, 43010, 43011, 43014, 43015, 43019, 43020, 43043, 43045, 43047,
    43048, 43052, 43053, 43056, 43062, 43072, 43124, 43136, 43138, 43188, 43204, 43206,
    43216, 43226, 43232, 43250, 43256, 43259, 43260, 43261, 43263, 43264, 43274, 43302,
    43310, 43312, 43335, 43346, 43348, 43360, 43389, 43392, 43395, 43396, 43443, 43444,
    43446, 43450, 43452, 43454, 43457, 43471, 43472, 43482, 43488, 43493, 43494, 43504,
    43514, 43519, 43520, 43561, 43567, 43569, 43571, 43573, 43575, 43584, 43587, 43588,
    43596, 43597, 43598, 43600, 43610, 43616, 43639, 43642, 43643, 43644, 43645, 43646,
    43696, 43697, 43698, 43701, 43703, 43705, 43710, 43712, 43713, 43714, 43715, 43739,
    43742, 43744, 43755, 43756, 43758, 43760, 43762, 43765, 43766, 43767, 43777, 43783,
    43785, 43791, 43793, 43799, 43808, 43815, 43816, 43823, 43824, 43867, 43868, 43882,
    43888, 44003, 44005, 44006, 44008, 44009, 44011, 44012, 44013, 44014, 44016, 44026,
    44032, 55204, 55216, 55239, 55243, 55292, 63744, 64110, 64112, 64218, 64256, 64263,
    64275, 64280, 64285, 64286, 64287, 64297, 64298, 64311, 64312, 64317, 64318, 64319,
    64320, 64322, 64323, 64325, 64326, 64336, 64434, 64467, 64830, 64848, 64912, 64914,
    64968, 65008, 65020, 65024, 65040, 65041, 65043, 65044, 65045, 65056, 65072, 65075,
    65077, 65101, 65104, 65105, 65106, 65107, 65108, 65109, 65110, 65136, 65141, 65142,
    65277, 65279, 65280, 65287, 65288, 65292, 65293, 65294, 65295, 65296, 65306, 65307,
    65308, 65313, 65339, 65343, 65344, 65345, 65371, 65382, 65438, 65440, 65471, 65474,
    65480, 65482, 65488, 65490, 65496, 65498, 65501, 65529, 65532, 65536, 65548, 65549,
    65575, 65576, 65595, 65596, 65598, 65599, 65614, 65616, 65630, 65664, 65787, 65799,
    65844, 65856, 65909, 65913, 65930, 65932, 66045, 66046, 66176, 66205, 66208, 66257,
    66272, 66273, 66300, 66304, 66336, 66340, 66349, 66379, 66384, 66422, 66427, 66432,
    66462, 66464, 66500, 66504, 66512, 66513, 66518, 66560, 66718, 66720, 66730, 66736,
    66772, 66776, 66812, 66816, 66856, 66864, 66916, 67072, 67383, 67392, 67414, 67424,
    67432, 67584, 67590, 67592, 67593, 67594, 67638, 67639, 67641, 67644, 67645, 67647,
    67670, 67672, 67680, 67703, 67705, 67712, 67743, 67751, 67760, 67808, 67827, 67828,
    67830, 67835, 67840, 67862, 67868, 67872, 67898, 67968, 68024, 68028, 68030, 68032,
    68048, 68050, 68096, 68097, 68100, 68101, 68103, 68108, 68112, 68116, 68117, 68120,
    68121, 68150, 68152, 68155, 68159, 68160, 68169, 68192, 68221, 68223, 68224, 68253,
    68256, 68288, 68296, 68297, 68325, 68327, 68331, 68336, 68352, 68406, 68416, 68438,
    68440, 68448, 68467, 68472, 68480, 68498, 68521, 68528, 68608, 68681, 68736, 68787,
    68800, 68851, 68858, 68864, 68900, 68904, 68912, 68922, 69216, 69247, 69248, 69290,
    69291, 69293, 69296, 69298, 69376, 69405, 69415, 69416, 69424, 69446, 69457, 69461,
    69552, 69573, 69580, 69600, 69623, 69632, 69633, 69634, 69635, 69688, 69703, 69714,
    69734, 69744, 69759, 69762, 69763, 69808, 69811, 69815, 69817, 69819, 69821, 69822,
    69837, 69838, 69840, 69865, 69872, 69882, 69888, 69891, 69927, 69932, 69933, 69941,
    69942, 69952, 69956, 69957, 69959, 69960, 69968, 70003, 70004, 70006, 70007, 70016,
    70018, 70019, 70067, 70070, 70079, 70081, 70085, 70089, 70093, 70094, 70095, 70096,
    70106, 70107, 70108, 70109, 70113, 70133, 70144, 70162, 70163, 70188, 70191, 70194,
    70196, 70197, 70198, 70200, 70206, 70207, 70272, 70279, 70280, 70281, 70282, 70286,
    70287, 70302, 70303, 70313, 70320, 70367, 70368, 70371, 70379, 70384, 70394, 70400,
    70402, 70404, 70405, 70413, 70415, 70417, 70419, 70441, 70442, 70449, 70450, 70452,
    70453, 70458, 70459, 70461, 70462, 70464, 70465, 70469, 70471, 70473, 70475, 70478,
    70480, 70481, 70487, 70488, 70493, 70498, 70500, 70502, 70509, 70512, 70517, 70656,
    70709, 70712, 70720, 70722, 70725, 70726, 70727, 70731, 70736, 70746, 70750, 70751,
    70754, 70784, 70832, 70835, 70841, 70842, 70843, 70847, 70849, 70850, 70852, 70854,
    70855, 70856, 70864, 70874, 71040, 71087, 71090, 71094, 71096, 71100, 71102, 71103,
    71105, 71128, 71132, 71134, 71168, 71216, 71219, 71227, 71229, 71230, 71231, 71233,
    71236, 71237, 71248, 71258, 71296, 71339, 71340, 71341, 71342, 71344, 71350, 71351,
    71352, 71353, 71360, 71370, 71424, 71451, 71453, 71456, 71458, 71462, 71463, 71468,
    71472, 71482, 71484, 71680, 71724, 71727, 71736, 71737, 71739, 71840, 71904, 71914,
    71923, 71935, 71943, 71945, 71946, 71948, 71956, 71957, 71959, 71960, 71984, 71990,
    71991, 71993, 71995, 71997, 71998, 71999, 72000, 72001, 72002, 72003, 72004, 72016,
    72026, 72096, 72104, 72106, 72145, 72148, 72152, 72154, 72156, 72160, 72161, 72162,
    72163, 72164, 72165, 72192, 72193, 72203, 72243, 72249, 72250, 72251, 72255, 72263,
    72264, 72272, 72273, 72279, 72281, 72284, 72330, 72343, 72344, 72346, 72349, 72350,
    72384, 72441, 72704, 72713, 72714, 72751, 72752, 72759, 72760, 72766, 72767, 72768,
    72769, 72784, 72794, 72813, 72818, 72848, 72850, 72872, 72873, 72874, 72881, 72882,
    72884, 72885, 72887, 72960, 72967, 72968, 72970, 72971, 73009, 73015, 73018, 73019,
    73020, 73022, 73023, 73030, 73031, 73032, 73040, 73050, 73056, 73062, 73063, 73065,
    73066, 73098, 73103, 73104, 73106, 73107, 73109, 73110, 73111, 73112, 73113, 73120,
    73130, 73440, 73459, 73461, 73463, 73648, 73649, 73664, 73685, 73728, 74650, 74752,
    74863, 74880, 75076, 77824, 78895, 78896, 78905, 82944, 83527, 92160, 92729, 92736,
    92767, 92768, 92778, 92880, 92910, 92912, 92917, 92928, 92976, 92983, 92992, 92996,
    93008, 93018, 93019, 93026, 93027, 93048, 93053, 93072, 93760, 93824, 93847, 93952,
    94027, 94031, 94032, 94033, 94088, 94095, 94099, 94112, 94176, 94178, 94179, 94180,
    94181, 94192, 94194, 94208, 100344, 100352, 101590, 101632, 101641, 110592, 110593, 110879,
    110928, 110931, 110948, 110952, 110960, 111356, 113664, 113771, 113776, 113789, 113792, 113801,
    113808, 113818, 113821, 113823, 113824, 113828, 119141, 119143, 119146, 119149, 119155, 119163,
    119171, 119173, 119180, 119210, 119214, 119362, 119365, 119520, 119540, 119648, 119673, 119808,
    119893, 119894, 119965, 119966, 119968, 119970, 119971, 119973, 119975, 119977, 119981, 119982,
    119994, 119995, 119996, 119997, 120004, 120005, 120070, 120071, 120075, 120077, 120085, 120086,
    120093, 120094, 120122, 120123, 120127, 120128, 120133, 120134, 120135, 120138, 120145, 120146,
    120486, 120488, 120513, 120514, 120539, 120540, 120571, 120572, 120597, 120598, 120629, 120630,
    120655, 120656, 120687, 120688, 120713, 120714, 120745, 120746, 120771, 120772, 120780, 120782,
    120832, 121344, 121399, 121403, 121453, 121461, 121462, 121476, 121477, 121499, 121504, 121505,
    121520, 122880, 122887, 122888, 122905, 122907, 122914, 122915, 122917, 122918, 122923, 123136,
    123181, 123184, 123191, 123198, 123200, 123210, 123214, 123215, 123584, 123628, 123632, 123642,
    124928, 125125, 125127, 125136, 125143, 125184, 125252, 125259, 125260, 125264, 125274, 126065,
    126124, 126125, 126128, 126129, 126133, 126209, 126254, 126255, 126270, 126464, 126468, 126469,
    126496, 126497, 126499, 126500, 126501, 126503, 126504, 126505, 126515, 126516, 126520, 126521,
    126522, 126523, 126524, 126530, 126531, 126535, 126536, 126537, 126538, 126539, 126540, 126541,
    126544, 126545, 126547, 126548, 126549, 126551, 126552, 126553, 126554, 126555, 126556, 126557,
    126558, 126559, 126560, 126561, 126563, 126564, 126565, 126567, 126571, 126572, 126579, 126580,
    126584, 126585, 126589, 126590, 126591, 126592, 126602, 126603, 126620, 126625, 126628, 126629,
    126634, 126635, 126652, 127232, 127245, 127462, 127488, 127995, 128000, 130032, 130042, 131072,
    173790, 173824, 177973, 177984, 178206, 178208, 183970, 183984, 191457, 194560, 195102, 196608,
    201547, 917505, 917506, 917536, 917632, 917760, 918000,
)

VALUES = (
    96, 66, 99, 33, 96, 18, 0, 12, 0, 11, 0, 14,
    0, 15, 0, 528, 13, 14, 0, 522, 0, 17, 0, 522,
    0, 96, 99, 96, 0, 522, 0, 103, 0, 512, 0, 522,
    0, 13, 0, 512, 522, 0, 512, 0, 522, 0, 522, 0,
    522, 10, 522, 10, 0, 10, 522, 10, 522, 10, 522, 10,
    132, 522, 0, 522, 0, 522, 14, 522, 0, 522, 13, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 132, 522, 0,
    522, 0, 522, 0, 13, 522, 0, 132, 0, 132, 0, 132,
    0, 132, 0, 132, 0, 521, 0, 521, 10, 13, 0, 103,
    0, 14, 0, 132, 0, 103, 0, 522, 132, 528, 0, 16,
    14, 0, 522, 132, 522, 0, 522, 132, 103, 0, 132, 522,
    132, 0, 132, 522, 528, 522, 0, 522, 0, 103, 522, 132,
    522, 132, 0, 522, 132, 522, 0, 528, 522, 132, 522, 0,
    14, 0, 522, 0, 132, 0, 522, 132, 522, 132, 522, 132,
    522, 132, 0, 522, 132, 0, 522, 0, 522, 0, 522, 0,
    132, 103, 132, 228, 522, 132, 228, 132, 522, 228, 132, 228,
    132, 228, 522, 132, 522, 132, 0, 528, 0, 522, 132, 228,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 132, 522, 228, 132, 0, 228, 0, 228, 132, 522, 0,
    228, 0, 522, 0, 522, 132, 0, 528, 522, 0, 512, 0,
    522, 0, 132, 0, 132, 228, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 132, 0, 228,
    132, 0, 132, 0, 132, 0, 132, 0, 522, 0, 522, 0,
    528, 132, 522, 132, 0, 132, 228, 0, 522, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 132, 522, 228, 132,
    0, 132, 228, 0, 228, 132, 0, 522, 0, 522, 132, 0,
    528, 0, 522, 132, 0, 132, 228, 0, 522, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 132, 522, 228, 132,
    228, 132, 0, 228, 0, 228, 132, 0, 132, 228, 0, 522,
    0, 522, 132, 0, 528, 0, 522, 512, 0, 132, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 228, 132, 228, 0, 228, 0,
    228, 132, 0, 522, 0, 228, 0, 528, 512, 0, 132, 228,
    132, 522, 0, 522, 0, 522, 0, 522, 0, 522, 132, 228,
    0, 132, 0, 132, 0, 132, 0, 522, 0, 522, 132, 0,
    528, 0, 512, 0, 522, 132, 228, 0, 522, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 132, 522, 228, 132, 228, 0,
    132, 228, 0, 228, 132, 0, 228, 0, 522, 0, 522, 132,
    0, 528, 0, 522, 0, 132, 228, 522, 0, 522, 0, 522,
    132, 522, 228, 132, 0, 228, 0, 228, 132, 522, 0, 522,
    228, 512, 522, 132, 0, 528, 512, 0, 522, 0, 132, 228,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 132,
    0, 228, 132, 0, 132, 0, 228, 0, 528, 0, 228, 0,
    512, 132, 512, 132, 0, 512, 132, 0, 528, 0, 512, 0,
    512, 0, 512, 0, 512, 0, 512, 0, 512, 132, 512, 132,
    512, 0, 512, 0, 512, 0, 132, 0, 528, 0, 512, 0,
    522, 0, 132, 0, 528, 512, 0, 132, 0, 132, 0, 132,
    0, 228, 522, 0, 522, 0, 132, 228, 132, 0, 132, 522,
    132, 0, 132, 0, 132, 0, 512, 228, 132, 228, 132, 228,
    132, 228, 132, 512, 528, 0, 512, 228, 132, 512, 132, 512,
    228, 512, 228, 512, 132, 512, 132, 228, 132, 228, 132, 512,
    228, 528, 228, 132, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 778, 810, 842, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 132, 0, 512, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 18, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    132, 0, 522, 132, 0, 522, 132, 0, 522, 0, 522, 0,
    132, 0, 512, 132, 228, 132, 228, 132, 228, 132, 0, 512,
    0, 512, 132, 0, 528, 0, 512, 0, 132, 103, 0, 528,
    0, 522, 0, 522, 132, 522, 132, 522, 0, 522, 0, 522,
    0, 132, 228, 132, 228, 0, 228, 132, 228, 132, 0, 528,
    512, 0, 512, 0, 512, 0, 512, 0, 528, 512, 0, 522,
    132, 228, 132, 0, 512, 228, 132, 228, 132, 0, 132, 228,
    132, 228, 132, 228, 132, 0, 132, 528, 0, 528, 0, 512,
    0, 132, 0, 132, 228, 522, 132, 228, 132, 228, 132, 228,
    132, 228, 522, 0, 528, 0, 132, 0, 132, 228, 522, 228,
    132, 228, 132, 228, 132, 522, 528, 522, 132, 228, 132, 228,
    132, 228, 132, 228, 0, 522, 228, 132, 228, 132, 0, 528,
    0, 522, 528, 522, 0, 522, 0, 522, 0, 522, 0, 132,
    0, 132, 228, 132, 522, 132, 522, 132, 522, 228, 132, 522,
    0, 522, 132, 0, 132, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 18, 0, 18, 96, 132,
    165, 103, 0, 15, 0, 15, 0, 13, 99, 103, 17, 0,
    17, 0, 14, 0, 17, 0, 18, 103, 0, 103, 512, 522,
    0, 512, 0, 522, 512, 0, 522, 0, 132, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0,
    512, 522, 512, 0, 512, 0, 512, 0, 512, 0, 522, 0,
    522, 0, 522, 0, 522, 132, 522, 0, 512, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 132, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 132, 0, 522, 0, 18, 0, 512, 0, 522,
    132, 228, 0, 520, 0, 522, 0, 512, 0, 132, 8, 512,
    8, 520, 0, 520, 0, 522, 0, 522, 0, 512, 0, 522,
    0, 520, 0, 512, 0, 512, 0, 512, 0, 512, 0, 512,
    0, 8, 0, 8, 0, 512, 0, 512, 0, 522, 0, 522,
    0, 522, 0, 522, 528, 522, 0, 522, 132, 0, 132, 0,
    522, 132, 522, 132, 0, 10, 522, 10, 522, 10, 522, 0,
    522, 0, 522, 132, 522, 132, 522, 132, 522, 228, 132, 228,
    0, 132, 0, 512, 0, 522, 0, 228, 522, 228, 132, 0,
    528, 0, 132, 522, 0, 522, 0, 522, 132, 528, 522, 132,
    0, 522, 132, 228, 0, 778, 0, 132, 228, 522, 132, 228,
    132, 228, 132, 228, 0, 522, 528, 0, 512, 132, 512, 528,
    512, 0, 522, 132, 228, 132, 228, 132, 0, 522, 132, 522,
    132, 228, 0, 528, 0, 512, 0, 512, 228, 132, 228, 512,
    132, 512, 132, 512, 132, 512, 132, 512, 132, 512, 0, 512,
    0, 522, 228, 132, 228, 0, 522, 228, 132, 0, 522, 0,
    522, 0, 522, 0, 522, 0, 522, 0, 522, 10, 522, 0,
    522, 228, 132, 228, 132, 228, 0, 228, 132, 0, 528, 0,
    522, 0, 810, 0, 842, 0, 512, 0, 512, 0, 522, 0,
    522, 0, 521, 132, 521, 0, 521, 0, 521, 0, 521, 0,
    521, 0, 521, 0, 521, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 132, 14, 0, 13, 14, 0, 132, 0, 17,
    0, 17, 14, 0, 15, 0, 14, 13, 0, 522, 0, 522,
    0, 103, 0, 15, 0, 14, 0, 15, 0, 528, 13, 14,
    0, 522, 0, 17, 0, 522, 0, 520, 644, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 103, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 512,
    0, 522, 512, 0, 512, 0, 132, 0, 522, 0, 522, 0,
    132, 512, 0, 522, 512, 0, 522, 0, 522, 132, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 528, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 512, 522, 0, 512, 522, 0, 512, 0, 522, 0, 522,
    0, 512, 522, 512, 0, 522, 0, 522, 0, 512, 522, 512,
    0, 512, 522, 132, 0, 132, 0, 132, 522, 0, 522, 0,
    522, 0, 132, 0, 132, 512, 0, 522, 512, 0, 522, 512,
    0, 522, 0, 522, 132, 0, 512, 0, 522, 0, 522, 0,
    512, 522, 0, 512, 522, 0, 512, 0, 522, 0, 522, 0,
    522, 0, 512, 522, 132, 0, 528, 0, 512, 0, 522, 0,
    132, 0, 522, 0, 522, 512, 522, 0, 522, 132, 512, 0,
    522, 512, 0, 522, 0, 228, 132, 228, 522, 132, 0, 512,
    528, 0, 132, 228, 522, 228, 132, 228, 132, 0, 103, 0,
    103, 0, 522, 0, 528, 0, 132, 522, 132, 228, 132, 0,
    528, 0, 522, 228, 522, 0, 522, 132, 0, 522, 0, 132,
    228, 522, 228, 132, 228, 522, 0, 132, 0, 228, 132, 528,
    522, 0, 522, 0, 512, 0, 522, 0, 522, 228, 132, 228,
    132, 228, 132, 0, 132, 0, 522, 0, 522, 0, 522, 0,
    522, 0, 522, 0, 522, 132, 228, 132, 0, 528, 0, 132,
    228, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0,
    522, 0, 132, 522, 228, 132, 228, 0, 228, 0, 228, 0,
    522, 0, 228, 0, 522, 228, 0, 132, 0, 132, 0, 522,
    228, 132, 228, 132, 228, 132, 522, 0, 528, 0, 132, 522,
    0, 522, 228, 132, 228, 132, 228, 132, 228, 132, 522, 0,
    522, 0, 528, 0, 522, 228, 132, 0, 228, 132, 228, 132,
    0, 522, 132, 0, 522, 228, 132, 228, 132, 228, 132, 0,
    522, 0, 528, 0, 522, 132, 228, 132, 228, 132, 228, 132,
    522, 0, 528, 0, 522, 0, 132, 228, 132, 228, 132, 0,
    528, 512, 0, 522, 228, 132, 228, 132, 0, 522, 528, 512,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 228, 0,
    228, 0, 132, 228, 132, 522, 228, 522, 228, 132, 0, 528,
    0, 522, 0, 522, 228, 132, 0, 132, 228, 132, 522, 0,
    522, 228, 0, 522, 132, 522, 132, 228, 522, 132, 0, 132,
    0, 522, 132, 228, 132, 522, 132, 228, 132, 0, 522, 0,
    522, 0, 522, 0, 522, 228, 132, 0, 132, 228, 132, 522,
    0, 528, 512, 0, 522, 0, 132, 0, 228, 132, 228, 132,
    228, 132, 0, 522, 0, 522, 0, 522, 132, 0, 132, 0,
    132, 0, 132, 522, 132, 0, 528, 0, 522, 0, 522, 0,
    522, 228, 0, 132, 0, 228, 132, 228, 132, 522, 0, 528,
    0, 522, 132, 228, 0, 522, 0, 512, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 103, 0, 522, 0, 522, 0, 522,
    0, 528, 0, 522, 0, 132, 0, 522, 132, 0, 522, 0,
    528, 0, 512, 0, 522, 0, 522, 0, 522, 512, 0, 522,
    0, 132, 522, 228, 0, 132, 522, 0, 522, 0, 522, 132,
    0, 228, 0, 522, 0, 522, 0, 522, 0, 520, 522, 0,
    522, 0, 520, 0, 512, 0, 522, 0, 522, 0, 522, 0,
    522, 0, 132, 0, 103, 0, 228, 132, 0, 228, 103, 132,
    0, 132, 0, 132, 0, 132, 0, 512, 0, 512, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 528,
    0, 132, 0, 132, 0, 132, 0, 132, 0, 132, 0, 132,
    0, 132, 0, 132, 0, 132, 0, 132, 0, 132, 0, 522,
    0, 132, 522, 0, 528, 0, 522, 0, 522, 132, 528, 0,
    522, 0, 512, 132, 0, 522, 132, 522, 0, 528, 0, 512,
    0, 512, 0, 512, 0, 512, 0, 512, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 522, 0, 522, 0, 522, 0, 522, 0, 522,
    0, 522, 0, 512, 0, 198, 0, 132, 0, 528, 0, 512,
    0, 512, 0, 512, 0, 512, 0, 512, 0, 512, 0, 512,
    0, 103, 0, 103, 0, 132, 0,
)


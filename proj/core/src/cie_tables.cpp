// SPDX-License-Identifier: Apache-2.0

// CIE 1931 2 degree standard observer and CIE illuminants D65 / F2,
// tabulated at 5 nm over [380, 780] nm.

#include "puspec/cie_tables.hpp"

namespace puspec::cie {

const std::array<std::array<double, 3>, kTableSize> kCmf1931 = {{
    {0.001368, 3.9e-05, 0.006450001}, // 380
    {0.002236, 6.4e-05, 0.01054999}, // 385
    {0.004243, 0.00012, 0.02005001}, // 390
    {0.00765, 0.000217, 0.03621}, // 395
    {0.01431, 0.000396, 0.06785001}, // 400
    {0.02319, 0.00064, 0.1102}, // 405
    {0.04351, 0.00121, 0.2074}, // 410
    {0.07763, 0.00218, 0.3713}, // 415
    {0.13438, 0.004, 0.6456}, // 420
    {0.21477, 0.0073, 1.0390501}, // 425
    {0.2839, 0.0116, 1.3856}, // 430
    {0.3285, 0.01684, 1.62296}, // 435
    {0.34828, 0.023, 1.74706}, // 440
    {0.34806, 0.0298, 1.7826}, // 445
    {0.3362, 0.038, 1.77211}, // 450
    {0.3187, 0.048, 1.7441}, // 455
    {0.2908, 0.06, 1.6692}, // 460
    {0.2511, 0.0739, 1.5281}, // 465
    {0.19536, 0.09098, 1.28764}, // 470
    {0.1421, 0.1126, 1.0419}, // 475
    {0.09564, 0.13902, 0.8129501}, // 480
    {0.05795001, 0.1693, 0.6162}, // 485
    {0.03201, 0.20802, 0.46518}, // 490
    {0.0147, 0.2586, 0.3533}, // 495
    {0.0049, 0.323, 0.272}, // 500
    {0.0024, 0.4073, 0.2123}, // 505
    {0.0093, 0.503, 0.1582}, // 510
    {0.0291, 0.6082, 0.1117}, // 515
    {0.06327, 0.71, 0.07824999}, // 520
    {0.1096, 0.7932, 0.05725001}, // 525
    {0.1655, 0.862, 0.04216}, // 530
    {0.2257499, 0.9148501, 0.02984}, // 535
    {0.2904, 0.954, 0.0203}, // 540
    {0.3597, 0.9803, 0.0134}, // 545
    {0.4334499, 0.9949501, 0.008749999}, // 550
    {0.5120501, 1.0, 0.005749999}, // 555
    {0.5945, 0.995, 0.0039}, // 560
    {0.6784, 0.9786, 0.002749999}, // 565
    {0.7621, 0.952, 0.0021}, // 570
    {0.8425, 0.9154, 0.0018}, // 575
    {0.9163, 0.87, 0.001650001}, // 580
    {0.9786, 0.8163, 0.0014}, // 585
    {1.0263, 0.757, 0.0011}, // 590
    {1.0567, 0.6949, 0.001}, // 595
    {1.0622, 0.631, 0.0008}, // 600
    {1.0456, 0.5668, 0.0006}, // 605
    {1.0026, 0.503, 0.00034}, // 610
    {0.9384, 0.4412, 0.00024}, // 615
    {0.8544499, 0.381, 0.00019}, // 620
    {0.7514, 0.321, 0.0001}, // 625
    {0.6424, 0.265, 4.999999e-05}, // 630
    {0.5419, 0.217, 3e-05}, // 635
    {0.4479, 0.175, 2e-05}, // 640
    {0.3608, 0.1382, 1e-05}, // 645
    {0.2835, 0.107, 0.0}, // 650
    {0.2187, 0.0816, 0.0}, // 655
    {0.1649, 0.061, 0.0}, // 660
    {0.1212, 0.04458, 0.0}, // 665
    {0.0874, 0.032, 0.0}, // 670
    {0.0636, 0.0232, 0.0}, // 675
    {0.04677, 0.017, 0.0}, // 680
    {0.0329, 0.01192, 0.0}, // 685
    {0.0227, 0.00821, 0.0}, // 690
    {0.01584, 0.005723, 0.0}, // 695
    {0.01135916, 0.004102, 0.0}, // 700
    {0.008110916, 0.002929, 0.0}, // 705
    {0.005790346, 0.002091, 0.0}, // 710
    {0.004109457, 0.001484, 0.0}, // 715
    {0.002899327, 0.001047, 0.0}, // 720
    {0.00204919, 0.00074, 0.0}, // 725
    {0.001439971, 0.00052, 0.0}, // 730
    {0.0009999493, 0.0003611, 0.0}, // 735
    {0.0006900786, 0.0002492, 0.0}, // 740
    {0.0004760213, 0.0001719, 0.0}, // 745
    {0.0003323011, 0.00012, 0.0}, // 750
    {0.0002348261, 8.48e-05, 0.0}, // 755
    {0.0001661505, 6e-05, 0.0}, // 760
    {0.000117413, 4.24e-05, 0.0}, // 765
    {8.307527e-05, 3e-05, 0.0}, // 770
    {5.870652e-05, 2.12e-05, 0.0}, // 775
    {4.150994e-05, 1.499e-05, 0.0}, // 780
}};

const std::array<double, kTableSize> kD65 = {
    49.9755, 52.3118, 54.6482, 68.7015, 82.7549, 87.1204, 91.486, 92.4589,
    93.4318, 90.057, 86.6823, 95.7736, 104.865, 110.936, 117.008, 117.41,
    117.812, 116.336, 114.861, 115.392, 115.923, 112.367, 108.811, 109.082,
    109.354, 108.578, 107.802, 106.296, 104.79, 106.239, 107.689, 106.047,
    104.405, 104.225, 104.046, 102.023, 100.0, 98.1671, 96.3342, 96.0611,
    95.788, 92.2368, 88.6856, 89.3459, 90.0062, 89.8026, 89.5991, 88.6489,
    87.6987, 85.4936, 83.2886, 83.4939, 83.6992, 81.863, 80.0268, 80.1207,
    80.2146, 81.2462, 82.2778, 80.281, 78.2842, 74.0027, 69.7213, 70.6652,
    71.6091, 72.979, 74.349, 67.9765, 61.604, 65.7448, 69.8856, 72.4863,
    75.087, 69.3398, 63.5927, 55.0054, 46.4182, 56.6118, 66.8054, 65.0941,
    63.3828,
};

const std::array<double, kTableSize> kF2 = {
    1.18, 1.48, 1.84, 2.15, 3.44, 15.69, 3.85, 3.74,
    4.19, 4.62, 5.06, 34.98, 11.81, 6.27, 6.63, 6.93,
    7.19, 7.4, 7.54, 7.62, 7.65, 7.62, 7.62, 7.45,
    7.28, 7.15, 7.05, 7.04, 7.16, 7.47, 8.04, 8.88,
    10.01, 24.88, 16.64, 14.59, 16.16, 17.56, 18.62, 21.47,
    22.79, 19.29, 18.66, 17.73, 16.54, 15.21, 13.8, 12.36,
    10.95, 9.65, 8.4, 7.32, 6.31, 5.43, 4.68, 4.02,
    3.45, 2.96, 2.55, 2.19, 1.89, 1.64, 1.53, 1.27,
    1.1, 0.99, 0.88, 0.76, 0.68, 0.61, 0.56, 0.54,
    0.51, 0.47, 0.47, 0.43, 0.46, 0.47, 0.4, 0.33,
    0.27,
};

} // namespace puspec::cie

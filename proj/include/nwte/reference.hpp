#pragma once

#include <array>
#include <cstddef>

// Published reference values the reproduction commands and the acceptance
// suite compare against.  Values are transcribed at their printed precision.

namespace nwte::reference {

struct EntropyRow {
    double gamma, theta;
    double shannon, renyi_half, mathai_haubold_half;  // lambda = 1
};
inline constexpr std::array<EntropyRow, 14> kEntropyTable = {{
    {0.1, 0.5, 0.94207, 1.32902, 0.63437},
    {0.4, 0.5, 0.91244, 1.30828, 0.61079},
    {0.8, 0.5, 0.88415, 1.28871, 0.58774},
    {1.2, 0.5, 0.86349, 1.27456, 0.57056},
    {1.5, 0.5, 0.85122, 1.26622, 0.56021},
    {1.8, 0.5, 0.84092, 1.25926, 0.55144},
    {2.0, 0.5, 0.83492, 1.25522, 0.54629},
    {0.7, -0.9, 1.40499, 1.66797, 0.94970},
    {0.7, -0.5, 1.33563, 1.61265, 0.91027},
    {0.7, -0.2, 1.24327, 1.54839, 0.84921},
    {0.7, 0.1, 1.11731, 1.46168, 0.75998},
    {0.7, 0.4, 0.95418, 1.34297, 0.64014},
    {0.7, 0.6, 0.82110, 1.23549, 0.54159},
    {0.7, 0.8, 0.66351, 1.08602, 0.42654},
}};

inline constexpr std::array<double, 5> kLifeTimePoints = {1.0, 3.0, 5.0, 7.0, 10.0};

struct LifeRow {
    double gamma, theta;
    std::array<double, 5> values;  // at t = kLifeTimePoints, lambda = 1
};
// Mean residual life K(t).
inline constexpr std::array<LifeRow, 11> kMeanResidualTable = {{
    {0.1, 0.5, {0.918095, 0.982144, 0.997423, 0.999648, 0.999982}},
    {0.7, 0.5, {0.900668, 0.980089, 0.997152, 0.999612, 0.999981}},
    {1.1, 0.5, {0.894316, 0.979369, 0.997057, 0.999599, 0.999980}},
    {1.6, 0.5, {0.889012, 0.978778, 0.996979, 0.999588, 0.999979}},
    {2.0, 0.5, {0.885996, 0.978447, 0.996936, 0.999582, 0.999979}},
    {0.5, -0.9, {1.219460, 1.027861, 1.003735, 1.000504, 1.000025}},
    {0.5, -0.5, {1.162075, 1.020915, 1.002810, 1.000380, 1.000018}},
    {0.5, -0.1, {1.088250, 1.011465, 1.001542, 1.000208, 1.000010}},
    {0.5, 0.1, {1.040826, 1.004807, 1.000638, 1.000086, 1.000004}},
    {0.5, 0.5, {0.905030, 0.980593, 0.997218, 0.999621, 0.999981}},
    {0.5, 1.0, {0.511566, 0.500207, 0.500004, 0.500000, 0.500001}},
}};
// Mean reversed residual life L(t).
inline constexpr std::array<LifeRow, 11> kMeanReversedResidualTable = {{
    {0.1, 0.5, {0.568855, 2.180127, 4.080871, 6.059352, 9.054745}},
    {0.7, 0.5, {0.579174, 2.217077, 4.126584, 6.107094, 9.102934}},
    {1.1, 0.5, {0.583962, 2.232563, 4.145442, 6.126726, 9.122736}},
    {1.6, 0.5, {0.588572, 2.246646, 4.162445, 6.144397, 9.140554}},
    {2.0, 0.5, {0.591508, 2.255231, 4.172744, 6.155087, 9.151330}},
    {0.5, -0.9, {0.415915, 1.657881, 3.395545, 5.331680, 8.317248}},
    {0.5, -0.5, {0.482478, 1.812299, 3.589379, 5.536490, 8.524715}},
    {0.5, -0.1, {0.528625, 1.968720, 3.792343, 5.751628, 8.742699}},
    {0.5, 0.1, {0.546765, 2.047690, 3.897321, 5.863170, 8.855739}},
    {0.5, 0.5, {0.576254, 2.207155, 4.114411, 6.094402, 9.090128}},
    {0.5, 1.0, {0.604164, 2.409363, 4.399438, 6.399130, 9.399122}},
}};

// Descriptive statistics of the bundled datasets (checksum gate).
struct DatasetStats {
    std::size_t n;
    double mean, median, sd, kurtosis, skewness, m1, m2, min, max;
};
inline constexpr DatasetStats kGwdStats = {34, 1.87941, 1.15, 1.95259, 5.00541,
                                           1.60369, 1.45692, 0.8, 0.1, 8.0};
inline constexpr DatasetStats kFdStats = {39, 6771.1, 3570.0, 11695.7, 25.4436,
                                          4.55806, 5872.77, 2180.0, 318.0, 71500.0};

// Fit comparison rows (estimates, standard errors, statistics) per dataset.
struct FitRow {
    const char* family;
    std::array<double, 3> estimates;   // unused tail entries are 0
    std::array<double, 3> std_errors;
    double a_star, w_star, ks, p_value;
};
inline constexpr std::array<FitRow, 9> kGwdFits = {{
    {"gamma", {1.062685, 1.768549, 0}, {0.228152, 0.480351, 0}, 0.320322, 0.051617, 0.097341, 0.904069},
    {"MOE", {0.822837, 0.481811, 0}, {0.484526, 0.173277, 0}, 0.246723, 0.0322959, 0.0876375, 0.956463},
    {"NHE", {0.900308, 0.631993, 0}, {0.344202, 0.415966, 0}, 0.24749, 0.0332962, 0.0838071, 0.97073},
    {"EE", {1.076412, 0.558049, 0}, {0.247363, 0.124162, 0}, 0.325543, 0.0528397, 0.0977771, 0.901191},
    {"TW", {1.076390, 2.392822, 0.418645}, {0.146953, 0.942422, 0.606964}, 0.255586, 0.0384952, 0.083499, 0.971723},
    {"TGE", {1.160258, 0.480348, 0.395341}, {0.220835, 0.217127, 0.501833}, 0.261748, 0.0407411, 0.0889903, 0.950556},
    {"TLE", {0.404133, 0.013541, 0.391774}, {0.267787, 0.047316, 0.373851}, 0.248782, 0.0336508, 0.0825401, 0.97467},
    {"Kappa", {1.428222, 1.236928, 1.304859}, {1.0934, 0.565213, 0.489635}, 0.248987, 0.037697, 0.0871235, 0.958587},
    {"NWTE", {0.465010, 9.179478, 0.344129}, {0.204453, 50.0745, 0.75164}, 0.234947, 0.0320984, 0.0793788, 0.982912},
}};
inline constexpr std::array<FitRow, 9> kFdFits = {{
    {"gamma", {0.919695, 7362.32, 0}, {0.182011, 1906.34, 0}, 1.2662, 0.210505, 0.147184, 0.366821},
    {"MOE", {0.293231, 0.000069, 0}, {0.205071, 0.000038, 0}, 1.08796, 0.148357, 0.142366, 0.407993},
    {"NHE", {0.609712, 0.000374, 0}, {0.127014, 0.000163, 0}, 0.900554, 0.117556, 0.136633, 0.460365},
    {"EE", {0.968901, 0.000144, 0}, {0.212611, 0.000032, 0}, 1.34484, 0.23414, 0.150306, 0.341607},
    {"TW", {0.961730, 10522.55, 0.805980}, {0.105471, 2312.24, 0.209698}, 0.780029, 0.102975, 0.11102, 0.722328},
    {"TGE", {1.081744, 0.000103, 0.800145}, {0.215061, 0.000032, 0.21265}, 0.795675, 0.121992, 0.108377, 0.749403},
    {"TLE", {0.000095, 8.1e-12, 0.801661}, {0.000021, 1.3e-9, 0.207988}, 0.782863, 0.110629, 0.108711, 0.74601},
    {"Kappa", {0.038151, 27.732540, 1496.464}, {0.095815, 67.9672, 253.781}, 3.2369, 0.658064, 0.218663, 0.048011},
    {"NWTE", {0.000097, 29.109413, 0.808284}, {0.000022, 154.575, 0.199919}, 0.775836, 0.111574, 0.108037, 0.75285},
}};

// NWTE parameter estimates used for the hydrologic tables.
inline constexpr std::array<double, 3> kGwdNwteEstimates = {0.465010, 9.179478, 0.344129};
inline constexpr std::array<double, 3> kFdNwteEstimates = {0.000097, 29.109413, 0.808284};

struct ReturnLevelRow {
    double T;
    double gwd_level, gwd_dev, fd_level, fd_dev;  // x_T and mean deviation about it
};
inline constexpr std::array<ReturnLevelRow, 7> kReturnLevelTable = {{
    {2, 1.24872, 1.31433, 4143.93, 4422.2},
    {5, 2.97016, 1.9147, 9802.81, 6392.9},
    {10, 4.34956, 2.89705, 14378.1, 9653.1},
    {20, 5.7765, 4.11844, 19306.6, 13873.8},
    {50, 7.70555, 5.92134, 26491.6, 20592.4},
    {100, 9.18173, 7.35495, 32468.3, 26397.4},
    {200, 10.665, 8.81682, 38858.8, 32695.9},
}};

struct ReturnPeriodRow {
    double value, period;
};
inline constexpr std::array<ReturnPeriodRow, 5> kGwdReturnPeriods = {{
    {4.0, 8.41121}, {5.1, 14.4311}, {5.3, 15.8987}, {6.8, 32.5876}, {8.0, 57.4359},
}};
inline constexpr std::array<ReturnPeriodRow, 5> kFdReturnPeriods = {{
    {13900, 9.32193}, {15100, 11.1074}, {17300, 15.1842}, {20600, 23.7727}, {71500, 5183.11},
}};

// Conditional event means E[X | X > Q].
inline constexpr double kGwdEventThreshold = 8.0;
inline constexpr double kGwdConditionalMean = 10.1378;
inline constexpr double kFdEventThreshold = 71500.0;
inline constexpr double kFdConditionalMean = 81788.2;

}  // namespace nwte::reference

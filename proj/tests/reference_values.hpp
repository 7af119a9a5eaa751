#pragma once

// Generated by tests/oracle/make_reference.py (mpmath, 50 digits). Do not edit.

#include <vector>

namespace reference {

struct KernelCase {
  const char* domain;
  std::vector<double> kappa;
  double mu, nu;
  std::vector<double> x, y;
  std::vector<double> values;  // P_n(x,y), n = 0..4
};

inline const std::vector<KernelCase> kernels = {
    {"ball", {0.5, 0.0}, 1.0, 0.5, {0.3, -0.4}, {-0.5, 0.2},
     {1.0, -0.81375000000000003206, 1.770140624999999917, -3.1088077001953124859, 0.80810691753784172447}},
    {"ball", {0.0, 0.0}, 0.5, 0.0, {0.6, 0.1}, {0.2, 0.7},
     {1.0, 0.76000000000000000666, -0.79019999999999970217, -0.12007999999999955605, -0.74907650000000016203}},
    {"ball", {0.3, 0.7}, 0.0, 1.5, {-0.2, 0.5}, {0.45, 0.35},
     {1.0, 0.076190476190476155514, 14.496111111111110707, 1.7510688705234151336, 19.373699617856888709}},
    {"ball", {0.3, 0.7, 0.5}, 0.5, 0.5, {0.2, -0.3, 0.4}, {-0.1, 0.5, 0.3},
     {1.0, -0.11571428571428571603, 6.3559178571428567769, -1.2129587391774891434, 2.13002092436079418}},
    {"ball", {0.5, 0.0, 0.0}, 1.0, 0.0, {0.5, 0.1, -0.2}, {0.1, -0.6, 0.3},
     {1.0, -0.66500000000000000583, -0.22702499999999978766, -0.61150993750000022407, -2.8878631173437500618}},
    {"simplex", {0.3, 0.7}, 0.5, 0.5, {0.2, 0.3}, {0.5, 0.1},
     {1.0, 0.53999999999999997785, 0.42639015151515172435, -1.4261164772727271417, -0.26085637438322338816}},
    {"simplex", {0.0, 0.0}, 1.0, 0.0, {0.1, 0.6}, {0.35, 0.35},
     {1.0, 1.3124999999999997329, -0.082190624999999666894, 1.4648345703125002003, -1.6965773920166010712}},
    {"simplex", {0.5, 0.0, 0.0}, 0.0, 1.5, {0.2, 0.1, 0.3}, {0.1, 0.5, 0.2},
     {1.0, 0.9428571428571426499, 0.80466200466200483008, 0.011859500499500489254, -7.28619129477993604}},
};

inline constexpr double jacobi_5_half_mhalf_03 = 0.26168625;
inline constexpr double jacobi_norm_2_15_mhalf = 0.18229166666666666667;
inline constexpr double gegenbauer_Z_4_15_m02 = 3.256;
inline constexpr double gen_gegenbauer_2_1_half_04 = -0.9;
inline constexpr double jacobi_moment_t6 = 0.98174770424681038702;
inline constexpr double ball_norm2_moment = 0.625;
inline constexpr double simplex_x1_moment = 0.25;
inline constexpr double b_ball_03_07_1_half = 4.7644077991826806791;
inline constexpr double ball_x1sq_uniform_d3 = 0.2;

}  // namespace reference

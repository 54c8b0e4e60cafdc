#pragma once

// Values frozen from generate_oracles.py (mpmath, 40 digits). None of them
// were produced by the library under test.
namespace oracle {

inline constexpr double ei_1 = 1.8951178163559367555;
inline constexpr double ei_m1 = -0.21938393439552027368;
inline constexpr double ei_half = 0.45421990486317357992;
inline constexpr double ei_mhalf = -0.55977359477616081175;
inline constexpr double ei_2sqrt3 = 13.590011162106333078;
inline constexpr double ei_m2sqrt3 = -0.0072871293848482607619;
inline constexpr double ei_5 = 40.185275355803177455;
inline constexpr double ei_m5 = -0.0011482955912753257973;
inline constexpr double ei_6 = 85.989762142439204804;
inline constexpr double ei_m6 = -0.0003600824521626586593;
inline constexpr double ei_6p5 = 127.74722023322596523;
inline constexpr double ei_m6p5 = -0.00020342986683939819737;
inline constexpr double ei_10 = 2492.2289762418777591;
inline constexpr double ei_m10 = -4.1569689296853242774e-6;
inline constexpr double ei_30 = 368973209407.27419706;
inline constexpr double ei_m30 = -3.0215520106888125448e-15;
inline constexpr double ei_50 = 1.0585636897131690963e20;
inline constexpr double ei_m50 = -3.7832640295504590187e-24;
inline constexpr double ei_1em8 = -17.843465069050832566;
inline constexpr double ei_m1em8 = -17.843465089050832566;

// sigma^2(u = 1) on a circle of radius 1 at speed 0.5.
inline constexpr double sigma2_circular_r1_v05_u1 = 1.0091569887233196022;

inline constexpr double a_085 = 1.2304498269896193772;
inline constexpr double b_085 = 0.92318339100346020761;

// D / Gamma_inert with A = B = 1 at a/w0 = 0.1, 0.5, 1, 2, 10.
inline constexpr double d_ratio_01 = 1.3285243632049609811e-4;
inline constexpr double d_ratio_05 = 0.0035004421535198195076;
inline constexpr double d_ratio_1 = 0.015119961410360353041;
inline constexpr double d_ratio_2 = 0.05123069746384565568;
inline constexpr double d_ratio_10 = 0.24343927857089587038;

// Excess spectral function F - w/8pi on circular worldlines with a = 1.
inline constexpr double circ_v09_w02 = 0.0057025557075988658537;
inline constexpr double circ_v09_w1 = 3.9992492345447781529e-4;
inline constexpr double circ_v09_w5 = 6.8929367154267070052e-10;
inline constexpr double circ_v05_w1 = 8.3829211951020307155e-4;

} // namespace oracle

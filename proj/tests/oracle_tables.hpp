// Frozen reference values. Generated by tools/gen_oracle_tables.py
// (mpmath at 40 digits; c-hat scan with numpy/scipy). Do not edit by hand.
#pragma once

#include <complex>

namespace oracle {

inline constexpr int kNumAbscissae = 50;
inline constexpr double kAbscissae[kNumAbscissae] = {
    9.9999999999999995475e-7, 1.4770961814710043454e-6,
    2.1818131293162224877e-6, 3.2227478419962948492e-6,
    4.7603085312566464362e-6, 7.0314335541430381227e-6,
    0.000010386103653091774310, 0.000015341274046343910683,
    0.000022660537312754812193, 0.000033471793134751348870,
    0.000049441057826328601470, 0.000073029197723157096502,
    0.00010787114909276631519, 0.00015933606241581450814,
    0.00023535468936502525195, 0.00034764151295237316446,
    0.00051349995130275320320, 0.00075848881725484342247,
    0.0011203609356555876628, 0.0016548808599261501020,
    0.0024444181989863684665, 0.0036106407876409945569,
    0.0053332637200879731698, 0.0078777434757197877663,
    0.011636184806593816848, 0.017187764144710647451,
    0.025387980786176340270, 0.037500489474520296018,
    0.055391829806107524548, 0.081819060291293196907,
    0.12085462152781505096, 0.17851389997185906910,
    0.26368219998792985503, 0.38948397072404489228,
    0.57530528590065121985, 0.84978124098393637009,
    1.2552086261430637215, 1.8540638686253849698,
    2.7386306605499144418, 4.0452208911576930106,
    5.9751803315357614466, 8.8259160513121237557,
    13.036726897376782475, 19.256499518995578768,
    28.443701908006605805, 42.014083475216075669,
    62.058842269245694467, 91.666878942414172116,
    135.40079685320480962, 200.00000000000000000,
};

inline constexpr double kJ0[kNumAbscissae] = {
    0.99999999999975000000, 0.99999999999945454672,
    0.99999999999880992287, 0.99999999999740347409,
    0.99999999999433486567, 0.99999999998763973554,
    0.99999999997303221273, 0.99999999994116132766,
    0.99999999987162501218, 0.99999999971990976611,
    0.99999999938889545035, 0.99999999866668407042,
    0.99999999709095380047, 0.99999999365300481353,
    0.99999998615204259641, 0.99999996978634484626,
    0.99999993407945108940, 0.99999985617368369634,
    0.99999968619786808218, 0.99999931534245205154,
    0.99999850620547497190, 0.99999674082093122122,
    0.99999288908716430365, 0.99998448534960914584,
    0.99996615008724461809, 0.99992614655454846554,
    0.99983886909909874809, 0.99964845922174692752,
    0.99923308338182731149, 0.99832711043865080302,
    0.99635187205160089119, 0.99204905032828634398,
    0.98269331276697530095, 0.96243361337881836388,
    0.91895194579482721330, 0.82745430506508405426,
    0.64324322800846172296, 0.30853345187365043747,
    -0.15927784653824684299, -0.39377655404162093901,
    0.14371805761791066670, -0.046053566296327822180,
    0.20936503445355589408, 0.16849030299958364086,
    -0.12171446223134694467, -0.11408049541486310710,
    0.0010506188082401774892, -0.081215124265422366459,
    -0.061008994830173979625, -0.015437439930565091592,
};

inline constexpr double kY0[kNumAbscissae] = {
    -8.8690314816594437317, -8.6207000371184819866,
    -8.3723685925745212537, -8.1240371480242066772,
    -7.8757057034604418344, -7.6273742588682314077,
    -7.3790428142159231692, -7.1307113694367796218,
    -6.8823799243902589426, -6.6340484787807785407,
    -6.3857170319875509729, -6.1373855827087549502,
    -5.8890541282188685821, -5.6407226628218043760,
    -5.3923911746362901496, -5.1440596389320299429,
    -4.8957280043537747112, -4.6473961645302567801,
    -4.3990638997638632179, -4.1507307577364526441,
    -3.9023958105294681726, -3.6540571622285695097,
    -3.4057109569576207144, -3.1573493942818813659,
    -2.9089567913140101103, -2.6605018468621111333,
    -2.4119226321861812833, -2.1630979279142245148,
    -1.9137936258178187886, -1.6635654094727758941,
    -1.4115897203060531042, -1.1563913849290184390,
    -0.89546731772016276173, -0.62496869065357700789,
    -0.34019490281408239059, -0.039478107337360752126,
    0.26125074992528744425, 0.48864931554808491248,
    0.45143249568102869743, -0.034810986963939584624,
    -0.29245806030491936282, 0.26437929399488839014,
    -0.070452146178575478355, -0.068263592781546895666,
    0.086970609632789154959, -0.046228792352400276940,
    -0.10127629724459439454, 0.018679592808006295431,
    0.031298780640171439147, -0.054265775249817910694,
};

inline constexpr double kE1[kNumAbscissae] = {
    13.238295893062491289, 12.848218249249962789,
    12.458140833057851408, 12.068063753082743166,
    11.677987169731949422, 11.287911319941862643,
    10.897836553688939619, 10.507763387919047519,
    10.117692586204363678, 9.7276252764000573437,
    9.3375631244253246495, 8.9475085909346104817,
    8.5574653104018834122, 8.1674386509689980562,
    7.7774365411870699145, 7.3874706907381546837,
    6.9975583925663833532, 6.6077251826348668945,
    6.2180087639228898061, 5.8284647922568323281,
    5.4391754001094184029, 5.0502617382052360654,
    4.6619023942914662190, 4.2743603680544951968,
    3.8880224132080390656, 3.5034560608700962787,
    3.1214914976286842962, 2.7433374556571075378,
    2.3707416185427340532, 2.0062048258081507530,
    1.6532503132518889463, 1.3167259993698973744,
    1.0030653622370913639, 0.72033332539436413353,
    0.47773459220462431337, 0.28412929571830473787,
    0.14522511097953957939, 0.059950644857582890972,
    0.018245295685968689320, 0.0035780293163109213469,
    0.00037048601352460722265, 0.000015081097405717256508,
    1.5592548949936181473e-7, 2.1449432510442302107e-10,
    1.5084674974094430059e-14, 1.3186498612260410538e-20,
    1.7723407639957111412e-29, 1.6699570320144468417e-42,
    1.1518268142208476159e-61, 6.8852261063076355977e-90,
};

inline constexpr double kJ0At1 = 0.76519768655796655145;
inline constexpr double kJ0FirstZero = 2.4048255576957727686;
inline constexpr double kY0At1 = 0.088256964215676957983;
inline constexpr double kY0FirstZero = 0.89357696627916752158;
inline constexpr double kE1At1 = 0.21938393439552027368;
inline constexpr double kE1At14 = 5.5656311111451821150e-8;
inline constexpr double kH01At1Re = 0.76519768655796655145;
inline constexpr double kH01At1Im = 0.088256964215676957983;

inline constexpr double kGL5Nodes[5] = {
    -0.90617984593866399280, -0.53846931010568309104, 0.0, 0.53846931010568309104, 0.90617984593866399280
};
inline constexpr double kGL5Weights[5] = {
    0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889, 0.47862867049936646804, 0.23692688505618908751
};

inline constexpr double kGL16Nodes[16] = {
    -0.98940093499164993260, -0.94457502307323257608, -0.86563120238783174388, -0.75540440835500303390, -0.61787624440264374845, -0.45801677765722738634, -0.28160355077925891323, -0.095012509837637440185, 0.095012509837637440185, 0.28160355077925891323, 0.45801677765722738634, 0.61787624440264374845, 0.75540440835500303390, 0.86563120238783174388, 0.94457502307323257608, 0.98940093499164993260
};
inline constexpr double kGL16Weights[16] = {
    0.027152459411754094852, 0.062253523938647892863, 0.095158511682492784810, 0.12462897125553387205, 0.14959598881657673208, 0.16915651939500253819, 0.18260341504492358887, 0.18945061045506849629, 0.18945061045506849629, 0.18260341504492358887, 0.16915651939500253819, 0.14959598881657673208, 0.12462897125553387205, 0.095158511682492784810, 0.062253523938647892863, 0.027152459411754094852
};

struct SpectralCase {
    std::complex<double> lambda;
    double energy;
    std::complex<double> zeta1, zeta2;
    double k1, k2, theta;
};

inline const SpectralCase kSpectralCases[4] = {
    {{1.0000000000000000000, 1.0000000000000000000}, 1.0000000000000000000, {0.75000000000000000000, 0.25000000000000000000}, {0.75000000000000000000, -0.25000000000000000000}, -1.0606601717798212866, 0.35355339059327376220, 2.3561944901923449288},
    {{2.0000000000000000000, 0.0}, 1.0000000000000000000, {1.2500000000000000000, 0.0}, {0.0, -0.75000000000000000000}, -1.2500000000000000000, 0.75000000000000000000, 3.1415926535897932385},
    {{0.50000000000000000000, 0.30000000000000000000}, 2.0000000000000000000, {1.3934163041029024746, -0.41178571374981297009}, {0.83604978246174148473, 0.68630952291635495015}, 1.6249886877434309226, 0.80036756261989881261, -0.54041950027058415544},
    {{1.0000000000000000000, 1.0000000000000000000}, 4.0000000000000000000, {1.5000000000000000000, 0.50000000000000000000}, {1.5000000000000000000, -0.50000000000000000000}, -2.1213203435596425732, 0.70710678118654752440, 2.3561944901923449288},
};

inline constexpr double kT1Example = 17.643492964318047410;
inline constexpr double kT1ExampleCos = 0.94362831916041771781;

struct GreenCase {
    const char* label;
    double k1, k2, energy;
    double x1, x2;
    std::complex<double> value;
};

inline const GreenCase kGreenCases[13] = {
    {"T1 interior wedge", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 1.0000000000000000000, 0.50000000000000000000, {-0.010406780211596393068, 0.031319930127376323068}},
    {"T1 diagonal probe", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 1.0000000000000000000, 1.0000000000000000000, {-0.0036445470340604937879, 0.010968518228675189364}},
    {"T2 upper wedge", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 0.30000000000000000000, 1.5000000000000000000, {0.052555954472466492121, -0.020687420403500430196}},
    {"T3 lower wedge", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 1.0000000000000000000, -1.0000000000000000000, {-0.041451388912158355240, 0.12475084300952580220}},
    {"T1 shallow wedge", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 2.0000000000000000000, 0.10000000000000000000, {0.053436003360168512705, 0.039917885985365852158}},
    {"T2 on axis", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 0.0, 1.4000000000000000000, {0.068192716340822105981, 0.0}},
    {"T3 on axis", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 0.0, -1.4000000000000000000, {-0.15875303816529688848, 0.0}},
    {"T2 for switch test", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 1.3000000000000000000, 0.70000000000000000000, {0.0028250072309351759932, 0.052067320576068056123}},
    {"T1 narrow feature", -1.0000495049504950495, 0.0099504950495049504950, 1.0000000000000000000, 1.5000000000000000000, 0.60000000000000000000, {-0.0032719577714459694210, -0.046187858481691928225}},
    {"inner disk via scaling x10", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 0.19000000000000000000, 0.050000000000000000000, {0.17666701148552572845, -0.042765536423133716685}},
    {"ring b via scaling x5", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 0.35000000000000000000, 0.10000000000000000000, {0.082881364279248858487, -0.038766102623862025128}},
    {"ring c via scaling x2", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 0.80000000000000000000, -0.30000000000000000000, {-0.048713980752580037818, 0.075867529922758378477}},
    {"far field", 1.2500000000000000000, 0.75000000000000000000, 1.0000000000000000000, 3.0000000000000000000, 0.80000000000000000000, {0.00079340933969910090813, -0.00055264995084719033207}},
};

// full dispatch at the spectral-parameter level (rotation included)
inline const std::complex<double> kFullDispatchLambda{1.0000000000000000000, 1.0000000000000000000};
inline constexpr double kFullDispatchEnergy = 1.0;
inline constexpr double kFullDispatchX1 = 1.2;
inline constexpr double kFullDispatchX2 = 0.4;
inline const std::complex<double> kFullDispatchValue{-0.0078634259256075527115, 0.020225923750021617634};

inline constexpr double kCHatTerm1 = 0.79788327767016620;
inline constexpr double kCHatTerm2 = 3.6690141391852302;
inline constexpr double kCHat = 0.49144168768023389;

}  // namespace oracle

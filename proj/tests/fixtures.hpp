#pragma once

// Frozen reference values used by the unit and acceptance suites: published
// series coefficients and closed-form constants, transcribed exactly.

#include <string>
#include <vector>

#include "qmoment/sqrt2.hpp"

namespace fixtures {

using qmoment::Rational;
using qmoment::Sqrt2;

// a/b + (c/d) sqrt2
inline Sqrt2 sq(long long an, long long ad, long long bn, long long bd) {
    return Sqrt2(Rational(mpz_class(static_cast<long>(an)), mpz_class(static_cast<long>(ad))),
                 Rational(mpz_class(static_cast<long>(bn)), mpz_class(static_cast<long>(bd))));
}
// pure rational r/s
inline Sqrt2 ra(long long r, long long s = 1) { return sq(r, s, 0, 1); }
// x/(d*sqrt2)  ==  (x/(2d)) sqrt2
inline Sqrt2 over_rt(long long x, long long d = 1) { return sq(0, 1, x, 2 * d); }
// (x/d) sqrt2
inline Sqrt2 times_rt(long long x, long long d = 1) { return sq(0, 1, x, d); }
inline Sqrt2 times_rt_str(const std::string& x, const std::string& d) {
    return Sqrt2(Rational(0), Rational(mpz_class(x), mpz_class(d)));
}

// ---- determinant normalizations D_n(0), n = 0..10 -------------------------
inline std::vector<Sqrt2> d_n_zero_list() {
    auto v = [](const char* num, const char* den, bool root) {
        Rational r{mpz_class(num), mpz_class(den)};
        if (!root) return Sqrt2(r);
        return Sqrt2(Rational(0), r * Rational(1, 2)); // num/(den sqrt2)
    };
    return {
        v("1", "1", true),
        v("1", "4", false),
        v("3", "8", true),
        v("135", "64", false),
        v("42525", "128", true),
        v("602791875", "1024", false),
        v("281970969328125", "4096", true),
        v("12002806286149194140625", "65536", false),
        v("7663946349837194629663623046875", "131072", true),
        v("748709847905086347512925275890191650390625", "1048576", false),
        v("6948614854850430587049622200362718103307453155517578125", "4194304", true),
    };
}

// ---- Delta_n coefficient tables -------------------------------------------
// delta_coeffs()[n-1] lists the published coefficients of Delta_n from q^0.
inline std::vector<std::vector<Sqrt2>> delta_coeffs() {
    std::vector<std::vector<Sqrt2>> t;
    t.push_back({ra(1), times_rt(1), sq(-4, 1, 1, 1), sq(-8, 1, 25, 2), sq(40, 1, 1, 1),
                 sq(36, 1, -229, 8)});
    t.push_back({ra(1), over_rt(7, 2), sq(-22, 4, 7, 4), sq(-11, 1, -137, 8), sq(19, 1, 7, 4),
                 sq(432, 32, 9069, 32), sq(-4604, 8, 1399, 8)});
    t.push_back({ra(1), over_rt(9, 4), sq(-143, 16, 18, 16), sq(-286, 16, 561, 16),
                 sq(2387, 8, 9, 8), sq(18524, 64, -33837, 64), sq(-111923, 16, 2033, 16)});
    t.push_back({ra(1), over_rt(107, 32), sq(-2743, 256, 428, 256), sq(-2743, 128, -5557, 128),
                 sq(40327, 128, 214, 128), sq(155822, 512, 961129, 512)});
    t.push_back({ra(1), over_rt(151, 64), sq(-57181, 4096, 4832, 4096),
                 sq(-57181, 2048, 132344, 2048), sq(2015041, 2048, 2416, 2048),
                 sq(3972901, 4096, -9954328, 4096)});
    t.push_back({ra(1), over_rt(835, 256), sq(-520049, 32768, 53440, 32768),
                 sq(-520049, 16384, -1243856, 16384), sq(18184313, 16384, 26720, 16384),
                 sq(71697154, 65536, 405931619, 65536)});
    t.push_back({ra(1), over_rt(1241, 512), sq(-4983643, 262144, 317696, 262144),
                 sq(-4983643, 131072, 13084736, 131072), sq(302791807, 131072, 158848, 131072),
                 sq(2402399884, 1048576, -7326921115, 1048576)});
    t.push_back({ra(1), over_rt(26291, 8192), sq(-176188271, 8388608, 13460992, 8388608),
                 sq(-176188271, 4194304, -476628608, 4194304),
                 sq(11003551439, 4194304, 6730496, 4194304),
                 sq(21830914607, 8388608, 2004033963205, 134217728)});
    return t;
}

// ---- ghost component matrix (rows Delta_1..Delta_6, columns gh_1..gh_4) ---
inline std::vector<std::vector<Sqrt2>> ghost_matrix() {
    return {
        {times_rt(-1), sq(10, 1, -2, 1), sq(30, 1, -103, 2), sq(12, 1, -60, 1)},
        {times_rt(-7, 4), sq(137, 8, -28, 8), sq(1644, 32, 377, 32), sq(-4527, 64, -10584, 64)},
        {times_rt(-9, 8), sq(653, 32, -72, 32), sq(15672, 256, -35379, 256),
         sq(-631007, 1024, -139824, 1024)},
        {times_rt(-107, 64), sq(55337, 2048, -6848, 2048), sq(10624704, 131072, 8802037, 131072),
         sq(-5575217647, 4194304, -1086489984, 4194304)},
        {times_rt(-151, 128), sq(251525, 8192, -19328, 8192),
         sq(96585600, 1048576, -258529321, 1048576),
         sq(-185707273519, 67108864, -14460397824, 67108864)},
        {times_rt(-835, 512), sq(4857617, 131072, -427520, 131072),
         sq(7461299712, 67108864, 9491428673, 67108864),
         sq(-78162497428735, 17179869184, -6044179430400, 17179869184)},
    };
}

// ---- leading wedge-trace coefficients (4x4 tables, columns m = 1..4) ------
inline std::vector<std::vector<Sqrt2>> c_plus_table() {
    return {
        {times_rt(2), ra(0), ra(0), ra(0)},
        {times_rt(11, 4), ra(-96), ra(0), ra(0)},
        {times_rt(211, 64), ra(-1609, 4), times_rt(-35840), ra(0)},
        {times_rt(1919, 512), ra(-524501, 512), times_rt(-504077), ra(423886848)},
    };
}
inline std::vector<std::vector<Sqrt2>> c_minus_table() {
    return {
        {times_rt(-1), ra(0), ra(0), ra(0)},
        {times_rt(-13, 8), ra(-40), ra(0), ra(0)},
        {times_rt(-271, 128), ra(-2971, 16), times_rt(13440), ra(0)},
        {times_rt(-2597, 1024), ra(-1038803, 2048), times_rt(1624893, 8), ra(147603456)},
    };
}

// ---- eigenvalue series: published (power, coefficient) pairs --------------
struct EigenRef {
    int parity; // 0 even, 1 odd
    int n;      // family index
    int k;      // eigenvalue index
    std::vector<std::pair<int, Sqrt2>> terms;
};

inline std::vector<EigenRef> eigen_refs() {
    std::vector<EigenRef> v;
    v.push_back({0, 0, 0,
                 {{1, times_rt(2)}, {2, times_rt(2)}, {3, times_rt(1)}, {4, times_rt(2)},
                  {5, times_rt(11, 4)}, {6, times_rt(1)}}});
    v.push_back({0, 1, 0,
                 {{1, times_rt(11, 4)}, {2, times_rt(11, 4)}, {3, times_rt(-983, 88)},
                  {4, times_rt(11, 4)}, {5, times_rt(6886331, 42592)}}});
    v.push_back({0, 1, 1, {{3, times_rt(-192, 11)}, {5, times_rt(76000, 1331)}}});
    v.push_back({0, 2, 0,
                 {{1, times_rt(211, 64)}, {2, times_rt(211, 64)}, {3, times_rt(-1244983, 27008)},
                  {4, times_rt(211, 64)}, {5, times_rt(7554810186491, 4809692672)},
                  {6, times_rt(-1154408355343, 1202423168)}}});
    v.push_back({0, 2, 1,
                 {{3, times_rt(-12872, 211)}, {5, times_rt(7392097696500, 15114834979)},
                  {6, times_rt(8012710588, 9393931)}}});
    v.push_back({0, 2, 2,
                 {{5, times_rt(143360, 1609)}, {7, times_rt(-482941605888, 4165509529)},
                  {9, times_rt_str("-20468604828168211968", "10784008474947049")}}});
    v.push_back({1, 0, 0,
                 {{1, times_rt(-1)}, {2, times_rt(-1)}, {3, times_rt(23, 2)}, {4, times_rt(-1)},
                  {5, times_rt(-251, 8)}, {6, times_rt(23, 2)}}});
    v.push_back({1, 1, 0,
                 {{1, times_rt(-13, 8)}, {2, times_rt(-13, 8)}, {3, times_rt(10687, 208)},
                  {4, times_rt(-13, 8)}, {5, times_rt(-121293131, 140608)},
                  {6, times_rt(15918103, 35152)}}});
    v.push_back({1, 1, 1,
                 {{3, times_rt(160, 13)}, {5, times_rt(151920, 2197)}, {6, times_rt(-854960, 2197)}}});
    v.push_back({1, 2, 0,
                 {{1, times_rt(-271, 128)}, {2, times_rt(-271, 128)}, {3, times_rt(8871127, 69376)},
                  {4, times_rt(-271, 128)}, {5, times_rt(-104586068271995, 20380171264)},
                  {6, times_rt(14369266864375, 5095042816)}}});
    v.push_back({1, 2, 1,
                 {{3, times_rt(11884, 271)}, {5, times_rt(22796026081686, 59130360181)},
                  {6, times_rt(-52712236634, 19902511)}}});
    v.push_back({1, 2, 2, {{5, times_rt(-215040, 2971)}}});
    return v;
}

// extended terms of the n = 1 even family (from the sqrt2-scaled display)
inline std::vector<std::pair<int, Sqrt2>> eigen_plus1_0_extended() {
    return {{6, times_rt(-1059743, 10648)},
            {7, times_rt(-15326598829, 10307264)},
            {8, times_rt(1001841961, 644204)}};
}
inline std::vector<std::pair<int, Sqrt2>> eigen_plus1_1_extended() {
    return {{6, times_rt(94368, 1331)},
            {7, times_rt(117182520, 161051)},
            {8, times_rt(-250017600, 161051)},
            {9, times_rt(-140863760292, 19487171)}};
}
// spot values of the n = 3 even family
inline std::vector<EigenRef> eigen_plus3_refs() {
    return {{0, 3, 0, {{1, times_rt(1919, 512)}, {3, times_rt(-218085103, 1965056)}}},
            {0, 3, 1, {{3, times_rt(-524501, 3838)}}},
            {0, 3, 2, {{5, times_rt(258087424, 524501)}}},
            {0, 3, 3,
             {{7, times_rt(-30277632, 72011)},
              {9, times_rt_str("116176571793604608", "373419098137331")}}}};
}

// ---- diagonal entries -i d_n, coefficients of q^1..q^6 ---------------------
inline std::vector<std::vector<Sqrt2>> d_entry_coeffs() {
    return {
        {over_rt(27, 2), sq(-9, 2, 27, 4), sq(-9, 1, -777, 8), sq(-372, 1, 405, 4),
         sq(-1239, 2, 18945, 32), sq(4479, 2, 759, 8)},
        {over_rt(-249, 8), sq(867, 32, -249, 16), sq(867, 16, 78171, 128),
         sq(-51909, 256, -50475, 128), sq(97029, 64, -5044725, 1024),
         sq(47751987, 2048, 2469099, 1024)},
        {over_rt(855, 16), sq(-4185, 128, 855, 32), sq(-4185, 64, -2237325, 1024),
         sq(-11265225, 4096, 819945, 1024), sq(-5638785, 1024, 1028457435, 32768),
         sq(19805812335, 131072, -667328265, 32768)},
    };
}

// ---- monic orthogonal polynomials -----------------------------------------
// P_2: x^0 coefficient series, q^0..q^6 (x^2 coefficient is 1).
inline std::vector<Sqrt2> p2_const_coeffs() {
    return {ra(-1, 2), times_rt(3, 2), sq(-6, 1, 3, 2), sq(-12, 1, 27, 4), sq(-36, 1, 75, 2),
            sq(-186, 1, 1905, 16), sq(-654, 1, 1851, 4)};
}
// P_3: x^1 coefficient series, q^0..q^6 (x^3 coefficient is 1, x^0 and x^2 vanish).
inline std::vector<Sqrt2> p3_x_coeffs() {
    return {ra(-7, 2), times_rt(-15, 4), sq(-15, 2, -15, 4), sq(-15, 1, 885, 8),
            sq(300, 1, -105, 4), sq(495, 2, -11325, 32), sq(-7095, 2, 6645, 8)};
}

// ---- first d-coefficient list, n = 1..16 -----------------------------------
inline std::vector<Sqrt2> delta1_list() {
    return {over_rt(27, 2), over_rt(-249, 8), over_rt(855, 16), over_rt(-10185, 128),
            over_rt(27909, 256), over_rt(-144837, 1024), over_rt(361647, 2048),
            over_rt(-7020585, 32768), over_rt(16664505, 65536), over_rt(-77736087, 262144),
            over_rt(178738833, 524288), over_rt(-1624521717, 4194304),
            over_rt(3654510825, 8388608), over_rt(-16302383325, 33554432),
            over_rt(36093907935, 67108864), over_rt(-1270383404265, 2147483648LL)};
}

// ---- hypergeometric value list, n = 1..7 ------------------------------------
inline std::vector<Sqrt2> y_list() {
    return {sq(2, 1, -1, 1),        sq(-4, 3, 4, 3),       sq(14, 5, -8, 5),
            sq(-72, 35, 64, 35),    sq(214, 63, -128, 63), sq(-604, 231, 512, 231),
            sq(1670, 429, -1024, 429)};
}

// ---- p = 2 ratio list (printed values and their decimal exponents) ---------
struct RatioRef {
    Rational value;   // the printed decimal, exactly
    int exponent10;   // floor(log10 |value|)
};
inline std::vector<RatioRef> ratio_refs() {
    return {
        {Rational(157505, 1000000), -1}, {Rational(202341, 1000000), -1},
        {Rational(1479, 1000), 0},       {Rational(439807, 10000), 1},
        {Rational(250376, 100), 3},      {Rational(178096, 1), 5},
        {Rational(140009, 10) * Rational(1000), 7},
        {Rational(119257, 1) * Rational(10000), 9},
    };
}

// ---- base moments -----------------------------------------------------------
inline std::vector<Rational> normalized_moment_list() {
    return {Rational(1), Rational(1, 2), Rational(7, 4), Rational(139, 8), Rational(5473, 16),
            Rational(357721, 32)};
}
inline std::vector<mpz_class> moment_integer_list() {
    return {mpz_class(1),
            mpz_class(7),
            mpz_class(139),
            mpz_class(5473),
            mpz_class(357721),
            mpz_class(34988647),
            mpz_class(4784061619L),
            mpz_class(871335013633L),
            mpz_class(203906055033841L),
            mpz_class(59618325600871687L),
            mpz_class("21297483077038703899"),
            mpz_class("9127322584507530151393")};
}

} // namespace fixtures

#include "halrect/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace halrect {
namespace {

constexpr double pi = std::numbers::pi;

using Objective = std::function<double(const Vec&)>;

struct Family {
    std::string name;
    std::vector<int> dims;  // catalog instantiations; lookup accepts any of these
    bool any_dim = false;   // when true, lookup also accepts other n >= 1
    bool convex = false;
    bool multimodal = true;
    // fills bounds / optimum / objective for a given n
    std::function<void(Problem&, int)> build;
};

Vec constant(int n, double v) { return Vec(static_cast<std::size_t>(n), v); }

double sqr(double v) { return v * v; }

// ---- per-dimension reference minimizers refined to double precision ----
constexpr double kAlpineX = 7.9170526915515148;     // argmax of sqrt(x) sin(x)
constexpr double kStyblinskiX = -2.9035340276711912;
constexpr double kSchwefelX = 420.96874635998197;

double alpine_unit() { return std::sqrt(kAlpineX) * std::sin(kAlpineX); }
double schwefel_unit() { return kSchwefelX * std::sin(std::sqrt(kSchwefelX)); }
double styblinski_unit() {
    double x = kStyblinskiX;
    return 0.5 * (x * x * x * x - 16.0 * x * x + 5.0 * x);
}

double ackley(const Vec& x) {
    double s1 = 0.0, s2 = 0.0;
    for (double v : x) {
        s1 += v * v;
        s2 += std::cos(2.0 * pi * v);
    }
    double n = static_cast<double>(x.size());
    return -20.0 * std::exp(-0.2 * std::sqrt(s1 / n)) - std::exp(s2 / n) + 20.0 +
           std::exp(1.0);
}

double alpine(const Vec& x) {
    double p = 1.0;
    for (double v : x) p *= std::sqrt(v) * std::sin(v);
    return -p;
}

double beale(const Vec& x) {
    return sqr(1.5 - x[0] + x[0] * x[1]) + sqr(2.25 - x[0] + x[0] * x[1] * x[1]) +
           sqr(2.625 - x[0] + x[0] * x[1] * x[1] * x[1]);
}

double bohachevsky1(const Vec& x) {
    return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * pi * x[0]) -
           0.4 * std::cos(4.0 * pi * x[1]) + 0.7;
}

double bohachevsky2(const Vec& x) {
    return x[0] * x[0] + 2.0 * x[1] * x[1] -
           0.3 * std::cos(3.0 * pi * x[0]) * std::cos(4.0 * pi * x[1]) + 0.3;
}

double bohachevsky3(const Vec& x) {
    return x[0] * x[0] + 2.0 * x[1] * x[1] -
           0.3 * std::cos(3.0 * pi * x[0] + 4.0 * pi * x[1]) + 0.3;
}

double booth(const Vec& x) {
    return sqr(x[0] + 2.0 * x[1] - 7.0) + sqr(2.0 * x[0] + x[1] - 5.0);
}

double branin(const Vec& x) {
    double b = 5.1 / (4.0 * pi * pi), c = 5.0 / pi, t = 1.0 / (8.0 * pi);
    return sqr(x[1] - b * x[0] * x[0] + c * x[0] - 6.0) +
           10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
}

double bukin6(const Vec& x) {
    return 100.0 * std::sqrt(std::fabs(x[1] - 0.01 * x[0] * x[0])) +
           0.01 * std::fabs(x[0] + 10.0);
}

double colville(const Vec& x) {
    return 100.0 * sqr(x[0] * x[0] - x[1]) + sqr(x[0] - 1.0) + sqr(x[2] - 1.0) +
           90.0 * sqr(x[2] * x[2] - x[3]) +
           10.1 * (sqr(x[1] - 1.0) + sqr(x[3] - 1.0)) +
           19.8 * (x[1] - 1.0) * (x[3] - 1.0);
}

double cross_in_tray(const Vec& x) {
    double r = std::hypot(x[0], x[1]);
    double e = std::fabs(std::sin(x[0]) * std::sin(x[1]) *
                         std::exp(std::fabs(100.0 - r / pi)));
    return -0.0001 * std::pow(e + 1.0, 0.1);
}

double dixon_price(const Vec& x) {
    double s = sqr(x[0] - 1.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * sqr(2.0 * x[i] * x[i] - x[i - 1]);
    return s;
}

double drop_wave(const Vec& x) {
    double r2 = x[0] * x[0] + x[1] * x[1];
    return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (2.0 + 0.5 * r2);
}

double easom(const Vec& x) {
    return -std::cos(x[0]) * std::cos(x[1]) *
           std::exp(-sqr(x[0] - pi) - sqr(x[1] - pi));
}

double eggholder(const Vec& x) {
    return -(x[1] + 47.0) * std::sin(std::sqrt(std::fabs(x[1] + 0.5 * x[0] + 47.0))) -
           x[0] * std::sin(std::sqrt(std::fabs(x[0] - (x[1] + 47.0))));
}

double goldstein_price(const Vec& x) {
    double a = 1.0 + sqr(x[0] + x[1] + 1.0) *
                         (19.0 - 14.0 * x[0] + 3.0 * x[0] * x[0] - 14.0 * x[1] +
                          6.0 * x[0] * x[1] + 3.0 * x[1] * x[1]);
    double b = 30.0 + sqr(2.0 * x[0] - 3.0 * x[1]) *
                          (18.0 - 32.0 * x[0] + 12.0 * x[0] * x[0] + 48.0 * x[1] -
                           36.0 * x[0] * x[1] + 27.0 * x[1] * x[1]);
    return a * b;
}

double griewank(const Vec& x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

const double kHartman3A[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
const double kHartman3P[4][3] = {{0.3689, 0.1170, 0.2673},
                                 {0.4699, 0.4387, 0.7470},
                                 {0.1091, 0.8732, 0.5547},
                                 {0.0381, 0.5743, 0.8828}};
const double kHartman6A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                 {0.05, 10, 17, 0.1, 8, 14},
                                 {3, 3.5, 1.7, 10, 17, 8},
                                 {17, 8, 0.05, 10, 0.1, 14}};
const double kHartman6P[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                 {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                 {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                 {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
const double kHartmanC[4] = {1.0, 1.2, 3.0, 3.2};

double hartman3(const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) e += kHartman3A[i][j] * sqr(x[j] - kHartman3P[i][j]);
        s += kHartmanC[i] * std::exp(-e);
    }
    return -s;
}

double hartman6(const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j) e += kHartman6A[i][j] * sqr(x[j] - kHartman6P[i][j]);
        s += kHartmanC[i] * std::exp(-e);
    }
    return -s;
}

double holder_table(const Vec& x) {
    double r = std::hypot(x[0], x[1]);
    return -std::fabs(std::sin(x[0]) * std::cos(x[1]) *
                      std::exp(std::fabs(1.0 - r / pi)));
}

double hump(const Vec& x) {
    double a = x[0], b = x[1];
    return 4.0 * a * a - 2.1 * a * a * a * a + a * a * a * a * a * a / 3.0 + a * b -
           4.0 * b * b + 4.0 * b * b * b * b;
}

const double kLangermannA[5][2] = {{3, 5}, {5, 2}, {2, 1}, {1, 4}, {7, 9}};
const double kLangermannC[5] = {1, 2, 5, 2, 3};

double langermann(const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < 5; ++i) {
        double d = sqr(x[0] - kLangermannA[i][0]) + sqr(x[1] - kLangermannA[i][1]);
        s += kLangermannC[i] * std::exp(-d / pi) * std::cos(pi * d);
    }
    return s;
}

double levy(const Vec& x) {
    auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    double s = sqr(std::sin(pi * w(0)));
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += sqr(w(i) - 1.0) * (1.0 + 10.0 * sqr(std::sin(pi * w(i) + 1.0)));
    std::size_t l = x.size() - 1;
    s += sqr(w(l) - 1.0) * (1.0 + sqr(std::sin(2.0 * pi * w(l))));
    return s;
}

double matyas(const Vec& x) {
    return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
}

double mccormick(const Vec& x) {
    return std::sin(x[0] + x[1]) + sqr(x[0] - x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1.0;
}

double michalewicz(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double t = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi);
        s += std::sin(x[i]) * std::pow(t, 20);
    }
    return -s;
}

double powell(const Vec& x) {
    return sqr(x[0] + 10.0 * x[1]) + 5.0 * sqr(x[2] - x[3]) +
           sqr(sqr(x[1] - 2.0 * x[2])) + 10.0 * sqr(sqr(x[0] - x[3]));
}

double rastrigin(const Vec& x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v);
    return s;
}

double rosenbrock(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 100.0 * sqr(x[i + 1] - x[i] * x[i]) + sqr(1.0 - x[i]);
    return s;
}

double rotated_h_ellip(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) s += x[j] * x[j];
    return s;
}

double schwefel(const Vec& x) {
    double s = static_cast<double>(x.size()) * schwefel_unit();
    for (double v : x) s -= v * std::sin(std::sqrt(std::fabs(v)));
    return s;
}

const double kShekelC[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6},
                                {3, 7, 3, 7}, {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1},
                                {6, 2, 6, 2}, {7, 3.6, 7, 3.6}};
const double kShekelB[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

double shekel(const Vec& x, int m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = kShekelB[i];
        for (int j = 0; j < 4; ++j) d += sqr(x[j] - kShekelC[i][j]);
        s += 1.0 / d;
    }
    return -s;
}

double shubert(const Vec& x) {
    double s1 = 0.0, s2 = 0.0;
    for (int i = 1; i <= 5; ++i) {
        s1 += i * std::cos((i + 1.0) * x[0] + i);
        s2 += i * std::cos((i + 1.0) * x[1] + i);
    }
    return s1 * s2;
}

double sphere(const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double styblinski_tang(const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v * v * v * v - 16.0 * v * v + 5.0 * v;
    return 0.5 * s;
}

double sum_of_powers(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += std::pow(std::fabs(x[i]), static_cast<double>(i + 2));
    return s;
}

double sum_square(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * x[i] * x[i];
    return s;
}

double trid(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += sqr(x[i] - 1.0);
    for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i - 1];
    return s;
}

double zakharov(const Vec& x) {
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s1 += x[i] * x[i];
        s2 += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

// ---- reference optima refined beyond the 4-decimal catalog values ----
// (see the catalog self-check test: |f(x*) - f*| stays below 1e-6)
constexpr double kBraninF = 0.39788735772973816;
const Vec kBraninX = {-pi, 12.275};
constexpr double kCrossInTrayF = -2.0626118708227397;
constexpr double kCrossInTrayX = 1.3494066214891946;
constexpr double kEggholderF = -959.64066272085051;
const Vec kEggholderX = {512.0, 404.23180541839473};
constexpr double kHolderF = -19.208502567886757;
const Vec kHolderX = {8.0550234534989271, 9.6645900114093144};
constexpr double kHumpF = -1.0316284534898774;
const Vec kHumpX = {0.089842013683013259, -0.71265640327041349};
constexpr double kLangermannF = -4.1558092918477865;
const Vec kLangermannX = {2.7934022100000352, 1.5972324999999999};
constexpr double kMcCormickF = -1.9132229549810367;
const Vec kMcCormickX = {-0.54719755119659785, -1.5471975511965976};
constexpr double kShekel5F = -10.153199679058231;
const Vec kShekel5X = {4.0000371150470226, 4.0001332670918849, 4.0000371150470226,
                       4.0001332670918849};
constexpr double kShekel7F = -10.402940566818665;
const Vec kShekel7X = {4.0005729641537913, 4.0006893318269507, 3.9994902139203133,
                       3.9996061014481391};
constexpr double kShekel10F = -10.536409816692023;
const Vec kShekel10X = {4.0007465377266271, 4.0005916919076569, 3.9996634000398843,
                        3.9995097936742527};
constexpr double kShubertF = -186.73090883102378;
const Vec kShubertX = {-7.0835064076515595, 4.8580568657957281};
constexpr double kHartman3F = -3.8627797869493365;
const Vec kHartman3X = {0.11461433710246996, 0.55564884938206687, 0.85254695213441938};
constexpr double kHartman6F = -3.3223680114155151;
const Vec kHartman6X = {0.20168951261057836, 0.15001069271431344, 0.47687397714344329,
                        0.27533243049129957, 0.31165161657753192, 0.65730053689310113};
constexpr double kMichalewicz2F = -1.8013034100985537;
const Vec kMichalewicz2X = {2.2029055201726027, 1.5707963267948966};
constexpr double kMichalewicz5F = -4.6876581791275357;
constexpr double kMichalewicz10F = -9.6601517156413479;

std::vector<Family>& families() {
    static std::vector<Family> fams = [] {
        std::vector<Family> f;
        auto add = [&](std::string name, std::vector<int> dims, bool any_dim, bool convex,
                       bool multimodal, std::function<void(Problem&, int)> build) {
            f.push_back({std::move(name), std::move(dims), any_dim, convex, multimodal,
                         std::move(build)});
        };

        add("Ackley", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            p.lower = constant(n, -18.0);
            p.upper = constant(n, 47.0);
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = ackley;
        });
        add("Alpine", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            for (int i = 1; i <= n; ++i) {
                double r = std::pow(2.0, 1.0 / i);
                p.lower.push_back(r);
                p.upper.push_back(8.0 + r);
            }
            p.f_star = -std::pow(alpine_unit(), n);
            p.x_star = constant(n, kAlpineX);
            p.objective = alpine;
        });
        add("Beale", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -4.5);
            p.upper = constant(2, 4.5);
            p.f_star = 0.0;
            p.x_star = {3.0, 0.5};
            p.objective = beale;
        });
        add("Bohachevsky1", {2}, false, true, false, [](Problem& p, int) {
            p.lower = constant(2, -55.0);
            p.upper = constant(2, 145.0);
            p.f_star = 0.0;
            p.x_star = {0.0, 0.0};
            p.objective = bohachevsky1;
        });
        add("Bohachevsky2", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -55.0);
            p.upper = constant(2, 145.0);
            p.f_star = 0.0;
            p.x_star = {0.0, 0.0};
            p.objective = bohachevsky2;
        });
        add("Bohachevsky3", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -55.0);
            p.upper = constant(2, 145.0);
            p.f_star = 0.0;
            p.x_star = {0.0, 0.0};
            p.objective = bohachevsky3;
        });
        add("Booth", {2}, false, true, false, [](Problem& p, int) {
            p.lower = constant(2, -10.0);
            p.upper = constant(2, 10.0);
            p.f_star = 0.0;
            p.x_star = {1.0, 3.0};
            p.objective = booth;
        });
        add("Branin", {2}, false, false, true, [](Problem& p, int) {
            p.lower = {-5.0, 10.0};
            p.upper = {10.0, 15.0};
            p.f_star = kBraninF;
            p.x_star = kBraninX;
            p.objective = branin;
        });
        add("Bukin6", {2}, false, true, true, [](Problem& p, int) {
            p.lower = {-15.0, -3.0};
            p.upper = {5.0, 3.0};
            p.f_star = 0.0;
            p.x_star = {-10.0, 1.0};
            p.objective = bukin6;
        });
        add("Colville", {4}, false, false, true, [](Problem& p, int) {
            p.lower = constant(4, -10.0);
            p.upper = constant(4, 10.0);
            p.f_star = 0.0;
            p.x_star = constant(4, 1.0);
            p.objective = colville;
        });
        add("Cross_in_Tray", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, 0.0);
            p.upper = constant(2, 10.0);
            p.f_star = kCrossInTrayF;
            p.x_star = constant(2, kCrossInTrayX);
            p.objective = cross_in_tray;
        });
        add("Dixon_and_Price", {2, 5, 10}, true, true, true, [](Problem& p, int n) {
            p.lower = constant(n, -10.0);
            p.upper = constant(n, 10.0);
            p.f_star = 0.0;
            for (int i = 1; i <= n; ++i)
                p.x_star.push_back(std::exp2(-(std::exp2(i) - 2.0) / std::exp2(i)));
            p.objective = dixon_price;
        });
        add("Drop_wave", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -4.0);
            p.upper = constant(2, 6.0);
            p.f_star = -1.0;
            p.x_star = {0.0, 0.0};
            p.objective = drop_wave;
        });
        add("Easom", {2}, false, false, true, [](Problem& p, int) {
            p.lower = {-100.0 / 2.0, -100.0 / 3.0};
            p.upper = {100.0, 200.0};
            p.f_star = -1.0;
            p.x_star = {pi, pi};
            p.objective = easom;
        });
        add("Eggholder", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -512.0);
            p.upper = constant(2, 512.0);
            p.f_star = kEggholderF;
            p.x_star = kEggholderX;
            p.objective = eggholder;
        });
        add("Goldstein_and_Price", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -1.1);
            p.upper = constant(2, 2.9);
            p.f_star = 3.0;
            p.x_star = {0.0, -1.0};
            p.objective = goldstein_price;
        });
        add("Griewank", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            for (int i = 1; i <= n; ++i) {
                p.lower.push_back(-std::sqrt(600.0 * i));
                p.upper.push_back(600.0 / std::sqrt(static_cast<double>(i)));
            }
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = griewank;
        });
        add("Hartman3", {3}, false, false, true, [](Problem& p, int) {
            p.lower = constant(3, 0.0);
            p.upper = constant(3, 1.0);
            p.f_star = kHartman3F;
            p.x_star = kHartman3X;
            p.objective = hartman3;
        });
        add("Hartman6", {6}, false, false, true, [](Problem& p, int) {
            p.lower = constant(6, 0.0);
            p.upper = constant(6, 1.0);
            p.f_star = kHartman6F;
            p.x_star = kHartman6X;
            p.objective = hartman6;
        });
        add("Holder_Table", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -10.0);
            p.upper = constant(2, 10.0);
            p.f_star = kHolderF;
            p.x_star = kHolderX;
            p.objective = holder_table;
        });
        add("Hump", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -5.0);
            p.upper = constant(2, 5.0);
            p.f_star = kHumpF;
            p.x_star = kHumpX;
            p.objective = hump;
        });
        add("Langermann", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, 0.0);
            p.upper = constant(2, 10.0);
            p.f_star = kLangermannF;
            p.x_star = kLangermannX;
            p.objective = langermann;
        });
        add("Levy", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            p.lower = constant(n, -10.0);
            p.upper = constant(n, 10.0);
            p.f_star = 0.0;
            p.x_star = constant(n, 1.0);
            p.objective = levy;
        });
        add("Matyas", {2}, false, true, false, [](Problem& p, int) {
            p.lower = constant(2, -5.5);
            p.upper = constant(2, 14.5);
            p.f_star = 0.0;
            p.x_star = {0.0, 0.0};
            p.objective = matyas;
        });
        add("McCormick", {2}, false, true, true, [](Problem& p, int) {
            p.lower = {-1.5, -3.0};
            p.upper = {4.0, 4.0};
            p.f_star = kMcCormickF;
            p.x_star = kMcCormickX;
            p.objective = mccormick;
        });
        add("Michalewicz", {2, 5, 10}, false, false, true, [](Problem& p, int n) {
            p.lower = constant(n, 0.0);
            p.upper = constant(n, pi);
            if (n == 2) {
                p.f_star = kMichalewicz2F;
                p.x_star = kMichalewicz2X;
            } else if (n == 5) {
                p.f_star = kMichalewicz5F;
            } else {
                p.f_star = kMichalewicz10F;
            }
            p.objective = michalewicz;
        });
        add("Powell", {4}, false, true, true, [](Problem& p, int) {
            p.lower = constant(4, -4.0);
            p.upper = constant(4, 5.0);
            p.f_star = 0.0;
            p.x_star = constant(4, 0.0);
            p.objective = powell;
        });
        add("Rastrigin", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            for (int i = 1; i <= n; ++i) {
                double r = std::pow(2.0, 1.0 / i);
                p.lower.push_back(-5.0 * r);
                p.upper.push_back(7.0 + r);
            }
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = rastrigin;
        });
        add("Rosenbrock", {2, 5, 10}, true, false, false, [](Problem& p, int n) {
            for (int i = 1; i <= n; ++i) {
                double r = std::sqrt(static_cast<double>(i));
                p.lower.push_back(-5.0 / r);
                p.upper.push_back(10.0 * r);
            }
            p.f_star = 0.0;
            p.x_star = constant(n, 1.0);
            p.objective = rosenbrock;
        });
        add("Rotated_H_Ellip", {2, 5, 10}, true, true, false, [](Problem& p, int n) {
            p.lower = constant(n, -35.0);
            p.upper = constant(n, 96.0);
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = rotated_h_ellip;
        });
        add("Schwefel", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            for (int i = 1; i <= n; ++i) {
                double r = std::sqrt(static_cast<double>(i));
                p.lower.push_back(-500.0 + 100.0 / r);
                p.upper.push_back(500.0 - 40.0 / r);
            }
            p.f_star = 0.0;
            p.x_star = constant(n, kSchwefelX);
            p.objective = schwefel;
        });
        add("Shekel5", {4}, false, false, true, [](Problem& p, int) {
            p.lower = constant(4, 0.0);
            p.upper = constant(4, 10.0);
            p.f_star = kShekel5F;
            p.x_star = kShekel5X;
            p.objective = [](const Vec& x) { return shekel(x, 5); };
        });
        add("Shekel7", {4}, false, false, true, [](Problem& p, int) {
            p.lower = constant(4, 0.0);
            p.upper = constant(4, 10.0);
            p.f_star = kShekel7F;
            p.x_star = kShekel7X;
            p.objective = [](const Vec& x) { return shekel(x, 7); };
        });
        add("Shekel10", {4}, false, false, true, [](Problem& p, int) {
            p.lower = constant(4, 0.0);
            p.upper = constant(4, 10.0);
            p.f_star = kShekel10F;
            p.x_star = kShekel10X;
            p.objective = [](const Vec& x) { return shekel(x, 10); };
        });
        add("Shubert", {2}, false, false, true, [](Problem& p, int) {
            p.lower = constant(2, -10.0);
            p.upper = constant(2, 10.0);
            p.f_star = kShubertF;
            p.x_star = kShubertX;
            p.objective = shubert;
        });
        add("Sphere", {2, 5, 10}, true, true, false, [](Problem& p, int n) {
            p.lower = constant(n, -2.75);
            p.upper = constant(n, 7.25);
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = sphere;
        });
        add("Styblinski_Tang", {2, 5, 10}, true, false, true, [](Problem& p, int n) {
            for (int i = 1; i <= n; ++i) {
                p.lower.push_back(-5.0);
                p.upper.push_back(5.0 + std::pow(3.0, 1.0 / i));
            }
            p.f_star = n * styblinski_unit();
            p.x_star = constant(n, kStyblinskiX);
            p.objective = styblinski_tang;
        });
        add("Sum_of_Powers", {2, 5, 10}, true, true, false, [](Problem& p, int n) {
            p.lower = constant(n, -0.55);
            p.upper = constant(n, 1.45);
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = sum_of_powers;
        });
        add("Sum_Square", {2, 5, 10}, true, true, false, [](Problem& p, int n) {
            p.lower = constant(n, -5.5);
            p.upper = constant(n, 14.5);
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = sum_square;
        });
        add("Trid", {2, 5, 10}, true, true, true, [](Problem& p, int n) {
            p.lower = constant(n, -100.0);
            p.upper = constant(n, 100.0);
            p.f_star = -static_cast<double>(n * (n + 4) * (n - 1)) / 6.0;
            for (int i = 1; i <= n; ++i)
                p.x_star.push_back(static_cast<double>(i) * (n + 1 - i));
            p.objective = trid;
        });
        add("Zakharov", {2, 5, 10}, true, true, true, [](Problem& p, int n) {
            p.lower = constant(n, -1.625);
            p.upper = constant(n, 13.375);
            p.f_star = 0.0;
            p.x_star = constant(n, 0.0);
            p.objective = zakharov;
        });
        return f;
    }();
    return fams;
}

const Family& find_family(const std::string& name) {
    for (const auto& f : families())
        if (f.name == name) return f;
    throw std::out_of_range("unknown problem '" + name + "'");
}

}  // namespace

Problem lookup(const std::string& name, int n) {
    const Family& fam = find_family(name);
    bool listed = std::find(fam.dims.begin(), fam.dims.end(), n) != fam.dims.end();
    if (!listed && !(fam.any_dim && n >= 1))
        throw std::out_of_range("problem '" + name + "' does not support n=" +
                                std::to_string(n));
    Problem p;
    p.name = fam.name;
    p.n = n;
    p.convex = fam.convex;
    p.multimodal = fam.multimodal;
    fam.build(p, n);
    if (static_cast<int>(p.lower.size()) != n || static_cast<int>(p.upper.size()) != n)
        throw std::logic_error("catalog bounds dimension mismatch for " + name);
    return p;
}

std::vector<std::pair<std::string, int>> catalog_entries() {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& f : families())
        for (int n : f.dims) out.emplace_back(f.name, n);
    return out;
}

double eval_raw(const Problem& problem, const Vec& x) {
    if (static_cast<int>(x.size()) != problem.n)
        throw std::invalid_argument("eval_raw: dimension mismatch");
    return problem.objective(x);
}

Problem perturb(const Problem& problem, double rho) {
    if (!problem.has_x_star())
        throw std::invalid_argument("perturb: no reference minimizer for " + problem.name);
    Problem p = problem;
    for (int j = 0; j < p.n; ++j) {
        double d = std::fabs(problem.upper[j] - problem.lower[j]);
        p.lower[j] = std::min(problem.lower[j] + rho * d, problem.x_star[j]);
        p.upper[j] = problem.upper[j] + rho * d;
    }
    return p;
}

double verify_optimum(const Problem& problem) {
    if (!problem.has_x_star()) return kInf;
    return std::fabs(problem.objective(problem.x_star) - problem.f_star);
}

void write_manifest(std::ostream& out) {
    for (const auto& [name, n] : catalog_entries()) {
        Problem p = lookup(name, n);
        out << p.name << " n=" << p.n << " lower=[";
        for (int j = 0; j < p.n; ++j) out << (j ? "," : "") << p.lower[j];
        out << "] upper=[";
        for (int j = 0; j < p.n; ++j) out << (j ? "," : "") << p.upper[j];
        out << "] f_star=" << p.f_star;
        out << " x_star=";
        if (p.has_x_star()) {
            out << "[";
            for (int j = 0; j < p.n; ++j) out << (j ? "," : "") << p.x_star[j];
            out << "]";
        } else {
            out << "unknown";
        }
        out << " type=" << (p.convex ? "convex" : "non-convex") << ","
            << (p.multimodal ? "multi-modal" : "uni-modal") << "\n";
    }
}

}  // namespace halrect

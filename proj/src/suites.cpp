#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <set>

#include "hgf/errors.hpp"
#include "hgf/ineq.hpp"
#include "hgf/metrics.hpp"
#include "hgf/scan.hpp"
#include "hgf/specfun.hpp"

namespace hgf::scan {

namespace {

using ineq::IneqCase;
using metrics::Domain;
using metrics::HalfPlanePoint;
using metrics::Point2;
using Tuple = std::vector<double>;

// Default grids shared by the inequality suites.
Grid c_grid() { return Grid::list({1, 1.5, 2, 5, 10}); }
Grid K_grid() { return Grid::list({1, 1.01, 1.2, 1.5, 2, 4, 8}); }
Grid t_grid() { return Grid::range(1e-6, 1e6, 61, true); }
Grid rho_grid() { return Grid::range(1e-4, 30, 41, true); }

// log-spaced toward both ends of (0,1)
Grid r_grid() {
    const Grid low = Grid::range(1e-6, 0.5, 61, true);
    std::set<double> values(low.values.begin(), low.values.end());
    for (double v : low.values) values.insert(1.0 - v);
    Grid g = Grid::list({values.begin(), values.end()});
    g.description = "1e-6..0.5 log and mirrored toward 1, 121 points";
    return g;
}

std::function<bool(const std::vector<IneqCase>&)> expect_no_violations() {
    return [](const std::vector<IneqCase>& rows) {
        return std::all_of(rows.begin(), rows.end(), [](const IneqCase& r) { return r.pass; });
    };
}

Plan tuple_plan(std::vector<std::string> names, std::vector<Tuple> tuples,
                std::function<IneqCase(const Tuple&)> eval) {
    Plan p;
    p.param_names = std::move(names);
    p.size = tuples.size();
    auto shared = std::make_shared<const std::vector<Tuple>>(std::move(tuples));
    p.eval = [shared, eval = std::move(eval)](std::size_t i) { return eval((*shared)[i]); };
    p.expect = expect_no_violations();
    p.expectation = "no violations";
    return p;
}

std::vector<Tuple> product(const std::vector<const std::vector<double>*>& axes) {
    std::vector<Tuple> out{Tuple{}};
    for (const auto* axis : axes) {
        std::vector<Tuple> next;
        next.reserve(out.size() * axis->size());
        for (const auto& prefix : out) {
            for (double v : *axis) {
                Tuple t = prefix;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Adjacent pairs of a sorted grid.
std::vector<std::pair<double, double>> adjacent(const std::vector<double>& grid) {
    const auto v = sorted_unique(grid);
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 1; i < v.size(); ++i) out.emplace_back(v[i - 1], v[i]);
    return out;
}

// Coordinates in [-10,10] x (0,10].
HalfPlanePoint random_half_plane_point(Sampler& rng) {
    const double re = rng.uniform(-10.0, 10.0);
    const double im = 10.0 * (1.0 - rng.uniform());
    return {re, im};
}

std::map<double, double> lambda_table(const std::vector<double>& Ks) {
    std::map<double, double> table;
    for (double K : Ks) table.emplace(K, specfun::lambda_K(K));
    return table;
}


std::vector<Suite> build_suites() {
    std::vector<Suite> s;
    const double tol = ineq::kDefaultTol;

    s.push_back({"bernoulli", "log(1+c1 t) <= (c1/c2) log(1+c2 t), c1 >= c2 >= 1",
                 {{"c1", c_grid()}, {"c2", c_grid()}, {"t", t_grid()}}, 0, tol, [](const Resolved& r) {
                     std::vector<Tuple> tuples;
                     for (auto& t : product({&r.grid("c1"), &r.grid("c2"), &r.grid("t")})) {
                         if (t[0] >= t[1]) tuples.push_back(t);
                     }
                     return tuple_plan({"c1", "c2", "t"}, std::move(tuples), [tol = r.tol](const Tuple& t) {
                         return ineq::bernoulli_pair(t[0], t[1], t[2], tol);
                     });
                 }});

    s.push_back({"prop21", "x <= c(x - 1/x) + 1 for c, x >= 1",
                 {{"c", c_grid()}, {"x", Grid::range(1, 1e6, 61, true)}}, 0, tol, [](const Resolved& r) {
                     return tuple_plan({"c", "x"}, product({&r.grid("c"), &r.grid("x")}),
                                       [tol = r.tol](const Tuple& t) { return ineq::prop21_case(t[0], t[1], tol); });
                 }});

    s.push_back({"lemma22", "log(1 + c(x - 1/x)) / log x is decreasing on x > 1 (adjacent grid pairs)",
                 {{"c", c_grid()}, {"x", Grid::range(1 + 1e-6, 1e6, 61, true)}}, 0, 1e-12, [](const Resolved& r) {
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (auto [a, b] : adjacent(r.grid("x"))) tuples.push_back({c, a, b});
                     }
                     return tuple_plan({"c", "x1", "x2"}, std::move(tuples), [tol = r.tol](const Tuple& t) {
                         return ineq::lemma22_monotone_case(t[0], t[1], t[2], tol);
                     });
                 }});

    s.push_back({"mfprop", "F(t) = log(1 + c sqrt(2(ch t - 1))) increasing with F(t)/t decreasing",
                 {{"c", c_grid()}, {"t", Grid::range(1e-4, 50, 61, true)}}, 0, tol, [](const Resolved& r) {
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (auto [a, b] : adjacent(r.grid("t"))) {
                             tuples.push_back({c, a, b, 0});
                             tuples.push_back({c, a, b, 1});
                         }
                     }
                     return tuple_plan({"c", "t1", "t2"}, std::move(tuples), [tol = r.tol](const Tuple& t) {
                         return t[3] == 0 ? ineq::mfprop_increasing_case(t[0], t[1], t[2], tol)
                                          : ineq::mfprop_ratio_case(t[0], t[1], t[2], tol);
                     });
                 }});

    s.push_back({"subadditivity", "F(s + t) <= F(s) + F(t)",
                 {{"c", c_grid()}, {"s", Grid::range(1e-3, 20, 21, true)}, {"t", Grid::range(1e-3, 20, 21, true)}},
                 0, 1e-12, [](const Resolved& r) {
                     return tuple_plan({"c", "s", "t"}, product({&r.grid("c"), &r.grid("s"), &r.grid("t")}),
                                       [tol = r.tol](const Tuple& t) {
                                           return ineq::subadditivity_case(t[0], t[1], t[2], tol);
                                       });
                 }});

    s.push_back({"comp-rho", "h/c <= rho <= 2h on random half-plane pairs", {{"c", Grid::list({1, 2, 10})}}, 100000,
                 1e-12, [](const Resolved& r) {
                     Sampler rng(r.seed);
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (long i = 0; i < r.samples; ++i) {
                             const auto x = random_half_plane_point(rng);
                             const auto y = random_half_plane_point(rng);
                             tuples.push_back({c, x.re(), x.im(), y.re(), y.im()});
                         }
                     }
                     return tuple_plan({"c", "x_re", "x_im", "y_re", "y_im", "rho", "h"}, std::move(tuples),
                                       [tol = r.tol](const Tuple& t) {
                                           return ineq::comp_rho_case(t[0], {t[1], t[2]}, {t[3], t[4]}, tol);
                                       });
                 }});

    {
        std::vector<double> xs{1.0};
        for (double d : Grid::range(1e-10, 1e6, 81, true).values) xs.push_back(1.0 + d);
        s.push_back({"arch-bounds", "2 log(1 + sqrt((x-1)/2)) <= arch x <= 2 log(1 + sqrt(2(x-1)))",
                     {{"x", Grid::list(std::move(xs))}}, 0, tol, [](const Resolved& r) {
                         return tuple_plan({"x", "arch"}, product({&r.grid("x")}),
                                           [tol = r.tol](const Tuple& t) { return ineq::arch_bounds_case(t[0], tol); });
                     }});
    }

    s.push_back({"fuji", "log(1+2c max{t^K,t^(1/K)}) <= K^(1+c) max{log(1+2ct), log(1+2ct)^(1/K)}",
                 {{"c", c_grid()}, {"K", K_grid()}, {"t", t_grid()}}, 0, tol, [](const Resolved& r) {
                     return tuple_plan({"c", "K", "t"}, product({&r.grid("c"), &r.grid("K"), &r.grid("t")}),
                                       [tol = r.tol](const Tuple& t) { return ineq::fuji_case(t[0], t[1], t[2], tol); });
                 }});

    s.push_back({"remark310", "K^2 in place of K^(1+c) fails at (K, c, t) = (1.2, 5, 0.001)", {}, 0, tol,
                 [](const Resolved& r) {
                     Plan p = tuple_plan({"c", "K", "t"}, {{0}, {1}}, [tol = r.tol](const Tuple& t) {
                         return t[0] == 0 ? ineq::remark310_case(tol) : ineq::fuji_case(5.0, 1.2, 0.001, tol);
                     });
                     p.expectation = "exactly 1 violation (the K^2 variant)";
                     p.expect = [](const std::vector<IneqCase>& rows) {
                         return std::count_if(rows.begin(), rows.end(), [](const IneqCase& c) { return !c.pass; }) == 1;
                     };
                     return p;
                 }});

    s.push_back({"k2-exponent", "the Bernoulli-type inequality with K^2 in place of K^(1+c)",
                 {{"c", c_grid()}, {"K", K_grid()}, {"t", t_grid()}}, 0, tol, [](const Resolved& r) {
                     Plan p = tuple_plan({"c", "K", "t"}, product({&r.grid("c"), &r.grid("K"), &r.grid("t")}),
                                         [tol = r.tol](const Tuple& t) {
                                             return ineq::k2_exponent_case(t[0], t[1], t[2], tol);
                                         });
                     p.expectation = "exploration; no assertion";
                     p.expect = [](const std::vector<IneqCase>&) { return true; };
                     return p;
                 }});

    s.push_back({"lemmaA", "(K^(1+c))^(K/(K-1)) - 2c > 0",
                 {{"c", c_grid()}, {"K", Grid::list({1, 1.001, 1.01, 1.2, 1.5, 2, 4, 8})}}, 0, tol,
                 [](const Resolved& r) {
                     return tuple_plan({"c", "K"}, product({&r.grid("c"), &r.grid("K")}),
                                       [tol = r.tol](const Tuple& t) { return ineq::lemmaA_case(t[0], t[1], tol); });
                 }});

    s.push_back({"lemmaB1", "t^(1/K) log t >= -K/e", {{"K", K_grid()}, {"t", Grid::range(1e-12, 1e4, 321, true)}}, 0,
                 1e-12, [](const Resolved& r) {
                     return tuple_plan({"K", "t"}, product({&r.grid("K"), &r.grid("t")}),
                                       [tol = r.tol](const Tuple& t) { return ineq::lemmaB1_case(t[0], t[1], tol); });
                 }});

    s.push_back({"lemmaB2", "K^(1+c) log(1+2ct) - log(1+2c t^(1/K)) > 0 on (e-1)/(2c) <= t < 1; s positions t",
                 {{"c", c_grid()}, {"K", K_grid()}, {"s", Grid::range(0, 0.999, 41, false)}}, 0, tol,
                 [](const Resolved& r) {
                     std::vector<Tuple> tuples;
                     for (const auto& t : product({&r.grid("c"), &r.grid("K"), &r.grid("s")})) {
                         const double t0 = (std::numbers::e - 1.0) / (2.0 * t[0]);
                         tuples.push_back({t[0], t[1], t0 + t[2] * (1.0 - t0)});
                     }
                     return tuple_plan({"c", "K", "t"}, std::move(tuples), [tol = r.tol](const Tuple& t) {
                         return ineq::lemmaB2_case(t[0], t[1], t[2], tol);
                     });
                 }});

    s.push_back({"lemmaC", "C(K) = (1+2ct)^K - (1+2c t^K) increasing in K for t >= 1 (adjacent K pairs)",
                 {{"c", c_grid()}, {"K", K_grid()}, {"t", Grid::range(1, 1e6, 25, true)}}, 0, tol,
                 [](const Resolved& r) {
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (auto [k1, k2] : adjacent(r.grid("K"))) {
                             for (double t : r.grid("t")) tuples.push_back({c, k1, k2, t});
                         }
                     }
                     return tuple_plan({"c", "K1", "K2", "t"}, std::move(tuples), [tol = r.tol](const Tuple& t) {
                         return ineq::lemmaC_monotone_case(t[0], t[1], t[2], t[3], tol);
                     });
                 }});

    s.push_back({"lemmaC-log", "log(1 + 2c t^K) <= K log(1 + 2ct) for t >= 1",
                 {{"c", c_grid()}, {"K", K_grid()}, {"t", Grid::range(1, 1e6, 25, true)}}, 0, tol,
                 [](const Resolved& r) {
                     return tuple_plan({"c", "K", "t"}, product({&r.grid("c"), &r.grid("K"), &r.grid("t")}),
                                       [tol = r.tol](const Tuple& t) { return ineq::lemmaC_case(t[0], t[1], t[2], tol); });
                 }});

    s.push_back({"schwarz-chain", "each link of the distortion proof chain at hyperbolic distance rho",
                 {{"c", c_grid()}, {"K", K_grid()}, {"rho", rho_grid()}}, 0, tol, [](const Resolved& r) {
                     auto lambdas = std::make_shared<const std::map<double, double>>(lambda_table(r.grid("K")));
                     return tuple_plan({"c", "K", "rho", "link1", "link2", "link3"},
                                       product({&r.grid("c"), &r.grid("K"), &r.grid("rho")}),
                                       [tol = r.tol, lambdas](const Tuple& t) {
                                           const auto chain = ineq::schwarz_chain(t[0], t[1], t[2], lambdas->at(t[1]));
                                           return ineq::schwarz_chain_case(chain, t[0], t[1], t[2], tol);
                                       });
                 }});

    s.push_back({"distortion-stretch", "distortion bound for the radial stretch z|z|^(K-1) on random pairs",
                 {{"c", Grid::list({1, 1.5, 2, 5})}, {"K", Grid::list({1.25, 2, 4})}}, 10000, tol,
                 [](const Resolved& r) {
                     auto lambdas = std::make_shared<const std::map<double, double>>(lambda_table(r.grid("K")));
                     Sampler rng(r.seed);
                     std::vector<Tuple> tuples;
                     for (const auto& ck : product({&r.grid("c"), &r.grid("K")})) {
                         for (long i = 0; i < r.samples; ++i) {
                             const auto x = random_half_plane_point(rng);
                             const auto y = random_half_plane_point(rng);
                             tuples.push_back({ck[0], ck[1], x.re(), x.im(), y.re(), y.im()});
                         }
                     }
                     return tuple_plan({"c", "K", "x_re", "x_im", "y_re", "y_im"}, std::move(tuples),
                                       [tol = r.tol, lambdas](const Tuple& t) {
                                           const HalfPlanePoint x{t[2], t[3]};
                                           const HalfPlanePoint y{t[4], t[5]};
                                           return ineq::empirical_distortion_case(
                                               t[0], t[1], x, y, metrics::stretch_map(t[1], x),
                                               metrics::stretch_map(t[1], y), lambdas->at(t[1]), tol);
                                       });
                 }});

    s.push_back({"distortion-mobius", "distortion bound (K = 1) for random Mobius self-maps of H",
                 {{"c", Grid::list({1, 1.5, 2, 5})}}, 10000, 1e-10, [](const Resolved& r) {
                     Sampler rng(r.seed);
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (long i = 0; i < r.samples;) {
                             metrics::MobiusH m{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                                                rng.uniform(-5, 5)};
                             if (m.det() < 0) {
                                 m.a = -m.a;
                                 m.b = -m.b;
                             }
                             const auto x = random_half_plane_point(rng);
                             const auto y = random_half_plane_point(rng);
                             auto pole_dist2 = [&](const HalfPlanePoint& z) {
                                 const double wr = m.c * z.re() + m.d;
                                 const double wi = m.c * z.im();
                                 return wr * wr + wi * wi;
                             };
                             if (m.det() < 0.1 || pole_dist2(x) < 1e-6 || pole_dist2(y) < 1e-6) continue;
                             tuples.push_back({c, m.a, m.b, m.c, m.d, x.re(), x.im(), y.re(), y.im()});
                             ++i;
                         }
                     }
                     return tuple_plan({"c", "m_a", "m_b", "m_c", "m_d", "x_re", "x_im", "y_re", "y_im"},
                                       std::move(tuples), [tol = r.tol](const Tuple& t) {
                                           IneqCase out = ineq::empirical_mobius_case(
                                               t[0], {t[1], t[2], t[3], t[4]}, {t[5], t[6]}, {t[7], t[8]}, tol);
                                           out.params = {{"c", t[0]},   {"m_a", t[1]},  {"m_b", t[2]},
                                                         {"m_c", t[3]}, {"m_d", t[4]},  {"x_re", t[5]},
                                                         {"x_im", t[6]}, {"y_re", t[7]}, {"y_im", t[8]}};
                                           return out;
                                       });
                 }});

    s.push_back({"triangle-half-plane",
                 "triangle inequality for h on H over random triples; rows with c < 1 are exploratory",
                 {{"c", Grid::list({1, 1.5, 2, 5})}}, 100000, 1e-12, [](const Resolved& r) {
                     Sampler rng(r.seed);
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (long i = 0; i < r.samples; ++i) {
                             const auto p = random_half_plane_point(rng);
                             const auto q = random_half_plane_point(rng);
                             const auto z = random_half_plane_point(rng);
                             tuples.push_back({c, p.re(), p.im(), q.re(), q.im(), z.re(), z.im()});
                         }
                     }
                     Plan plan = tuple_plan({"c", "p_re", "p_im", "q_re", "q_im", "z_re", "z_im"}, std::move(tuples),
                                            [tol = r.tol](const Tuple& t) {
                                                return ineq::triangle_case(Domain::HalfPlane, t[0], {t[1], t[2]},
                                                                           {t[3], t[4]}, {t[5], t[6]}, tol);
                                            });
                     plan.expectation = "no violations for c >= 1";
                     plan.expect = [](const std::vector<IneqCase>& rows) {
                         return std::all_of(rows.begin(), rows.end(),
                                            [](const IneqCase& x) { return x.pass || x.params[0].value < 1.0; });
                     };
                     return plan;
                 }});

    s.push_back({"disk-triangle",
                 "triangle inequality for h on the unit disk: collinear triples (-r, 0, r) with r = 1 - 10^-depth "
                 "plus phase-perturbed random triples; violations expected iff c < 2",
                 {{"c", Grid::list({2})}, {"depth", Grid::range(0.05, 12, 240, false)}}, 20000, 1e-12,
                 [](const Resolved& r) {
                     Sampler rng(r.seed);
                     std::vector<Tuple> tuples;
                     for (double c : r.grid("c")) {
                         for (double depth : r.grid("depth")) {
                             const double rad = 1.0 - std::pow(10.0, -depth);
                             tuples.push_back({c, -rad, 0.0, 0.0, 0.0, rad, 0.0});
                         }
                         for (long i = 0; i < r.samples; ++i) {
                             const double rad = 1.0 - std::pow(10.0, -rng.uniform(0.05, 12.0));
                             const double pa = std::numbers::pi + rng.uniform(-0.1, 0.1);
                             const double pz = rng.uniform(-0.1, 0.1);
                             const double qr = rng.uniform(0.0, 0.1);
                             const double pq = rng.uniform(0.0, 2.0 * std::numbers::pi);
                             tuples.push_back({c, rad * std::cos(pa), rad * std::sin(pa), qr * std::cos(pq),
                                               qr * std::sin(pq), rad * std::cos(pz), rad * std::sin(pz)});
                         }
                     }
                     Plan plan = tuple_plan({"c", "p_re", "p_im", "q_re", "q_im", "z_re", "z_im"}, std::move(tuples),
                                            [tol = r.tol](const Tuple& t) {
                                                return ineq::triangle_case(Domain::Disk, t[0], {t[1], t[2]},
                                                                           {t[3], t[4]}, {t[5], t[6]}, tol);
                                            });
                     plan.expectation = "no violations for c >= 2; at least one for each c < 2";
                     plan.expect = [](const std::vector<IneqCase>& rows) {
                         std::map<double, std::size_t> violations;
                         for (const auto& x : rows) violations[x.params[0].value] += x.pass ? 0 : 1;
                         return std::all_of(violations.begin(), violations.end(),
                                            [](const auto& kv) { return (kv.first >= 2.0) == (kv.second == 0); });
                     };
                     return plan;
                 }});

    s.push_back({"mu-roundtrip", "|mu_inv(mu(r)) - r| <= 1e-10", {{"r", r_grid()}}, 0, tol, [](const Resolved& r) {
                     return tuple_plan({"r"}, product({&r.grid("r")}), [tol = r.tol](const Tuple& t) {
                         const double err = std::abs(specfun::mu_inv(specfun::mu(t[0])) - t[0]);
                         return ineq::make_case("mu-roundtrip", {{"r", t[0]}}, err, 1e-10, tol,
                                                ineq::MarginScale::Absolute);
                     });
                 }});

    s.push_back({"mu-reflection", "|mu(r) mu(sqrt(1-r^2)) - pi^2/4| <= 1e-9", {{"r", r_grid()}}, 0, tol,
                 [](const Resolved& r) {
                     return tuple_plan({"r"}, product({&r.grid("r")}), [tol = r.tol](const Tuple& t) {
                         const auto p = specfun::ComplementaryPair::from_r(t[0]);
                         const double err = std::abs(specfun::mu(p) * specfun::mu(p.swapped()) - specfun::kPiSquaredOver4);
                         return ineq::make_case("mu-reflection", {{"r", t[0]}}, err, 1e-9, tol,
                                                ineq::MarginScale::Absolute);
                     });
                 }});

    s.push_back({"phi-identity", "|phi_{1,2}(r) - r| <= 1e-10", {{"r", r_grid()}}, 0, tol, [](const Resolved& r) {
                     return tuple_plan({"r"}, product({&r.grid("r")}), [tol = r.tol](const Tuple& t) {
                         const double err = std::abs(specfun::phi_K(1.0, t[0]) - t[0]);
                         return ineq::make_case("phi-identity", {{"r", t[0]}}, err, 1e-10, tol,
                                                ineq::MarginScale::Absolute);
                     });
                 }});

    s.push_back({"phi-inverse", "|phi_{1/K,2}(phi_{K,2}(r)) - r| <= 1e-8",
                 {{"K", Grid::list({1, 1.01, 1.2, 1.5, 2, 3, 4, 6, 8})}, {"r", r_grid()}}, 0, tol,
                 [](const Resolved& r) {
                     return tuple_plan({"K", "r"}, product({&r.grid("K"), &r.grid("r")}), [tol = r.tol](const Tuple& t) {
                         const auto p = specfun::ComplementaryPair::from_r(t[1]);
                         const auto back = specfun::phi_K_pair(1.0 / t[0], specfun::phi_K_pair(t[0], p));
                         const double err = std::abs(back.r - t[1]);
                         return ineq::make_case("phi-inverse", {{"K", t[0]}, {"r", t[1]}}, err, 1e-8, tol,
                                                ineq::MarginScale::Absolute);
                     });
                 }});

    s.push_back({"lambda-bound", "1 <= lambda(K) < exp(pi (K - 1/K)); the upper bound is strict for K > 1",
                 {{"K", Grid::list({1, 1.01, 1.1, 1.5, 2, 3, 5})}}, 0, tol, [](const Resolved& r) {
                     std::vector<Tuple> tuples;
                     for (double K : r.grid("K")) {
                         tuples.push_back({K, 0});
                         tuples.push_back({K, 1});
                     }
                     return tuple_plan({"K"}, std::move(tuples), [tol = r.tol](const Tuple& t) {
                         const double K = t[0];
                         const double lambda = specfun::lambda_K(K);
                         if (t[1] == 0) return ineq::make_case("lambda-lower", {{"K", K}}, 1.0, lambda, tol);
                         const double bound = std::exp(std::numbers::pi * (K - 1.0 / K));
                         IneqCase out = ineq::make_case("lambda-upper", {{"K", K}}, lambda, bound, tol,
                                                        ineq::MarginScale::RhsRelative);
                         if (K > 1.0) out.pass = lambda < bound;
                         return out;
                     });
                 }});

    s.push_back({"eta-bound", "eta_K(t) <= lambda(K) max{t^(1/K), t^K}, relative tolerance",
                 {{"K", K_grid()}, {"t", t_grid()}}, 0, tol, [](const Resolved& r) {
                     auto lambdas = std::make_shared<const std::map<double, double>>(lambda_table(r.grid("K")));
                     return tuple_plan({"K", "t"}, product({&r.grid("K"), &r.grid("t")}),
                                       [tol = r.tol, lambdas](const Tuple& t) {
                                           const double lhs = specfun::eta_K(t[0], t[1]);
                                           const double rhs = lambdas->at(t[0]) * ineq::power_max(t[0], t[1]);
                                           return ineq::make_case("eta-bound", {{"K", t[0]}, {"t", t[1]}}, lhs, rhs,
                                                                  tol, ineq::MarginScale::RhsRelative);
                                       });
                 }});

    return s;
}

}  // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = build_suites();
    return all;
}

const Suite& find_suite(const std::string& name) {
    for (const auto& s : suites()) {
        if (s.name == name) return s;
    }
    throw DomainError("unknown suite '" + name + "'");
}

const std::vector<SearchTarget>& search_targets() {
    static const std::vector<SearchTarget> all = {
        {"disk-triangle-violation", "disk-triangle", "disk-triangle",
         "triangle-inequality failures of h on the unit disk (default c = 1)", {{"c", Grid::list({1})}}},
        {"k2-exponent-violation", "k2-exponent", "k2-exponent",
         "(K, c, t) where K^2 in place of K^(1+c) breaks the Bernoulli-type inequality", {}},
    };
    return all;
}

const SearchTarget& find_search_target(const std::string& name) {
    for (const auto& t : search_targets()) {
        if (t.name == name || t.alias == name) return t;
    }
    throw DomainError("unknown search target '" + name + "'");
}

}  // namespace hgf::scan

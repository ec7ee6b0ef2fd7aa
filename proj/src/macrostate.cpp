#include "solcomp/macrostate.hpp"

#include "solcomp/kernels.hpp"
#include "solcomp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace solcomp {

namespace {
constexpr double kSlack = 1e-12;

std::vector<std::pair<long, long>> tall_components(const ShapeField& u,
                                                   const RegionSplit& rs,
                                                   double alpha) {
    std::vector<std::pair<long, long>> tall;
    for (const auto& [b, e] : rs.components) {
        double mx = 0.0;
        for (long l = b; l <= e; ++l) mx = std::max(mx, u[l]);
        if (mx >= alpha) tall.emplace_back(b, e);
    }
    return tall;
}

} // namespace

std::string_view bump_kind_name(BumpKind k) {
    switch (k) {
        case BumpKind::no_bump: return "no_bump";
        case BumpKind::multi_bump: return "multi_bump";
        case BumpKind::single_bump_nonregular: return "single_bump_nonregular";
        case BumpKind::single_bump_regular: return "single_bump_regular";
    }
    return "?";
}

MacrostateLabel classify(const ShapeField& u, const Nonlinearity& nl,
                         const MacroParams& mp) {
    MacrostateLabel out;
    const auto rs = region_split(u, nl);
    const auto tall = tall_components(u, rs, mp.alpha);
    out.n_tall_components = static_cast<int>(tall.size());
    if (tall.empty()) {
        out.kind = BumpKind::no_bump;
        return out;
    }
    if (tall.size() >= 2) {
        out.kind = BumpKind::multi_bump;
        return out;
    }
    const auto comp = tall.front();
    out.tall_component = comp;

    // regular iff some l0 in the component is a peak up to precision beta:
    // non-decreasing before it and non-increasing after it, within beta
    for (long l0 = comp.first; l0 <= comp.second; ++l0) {
        bool ok = true;
        for (long lp = comp.first; ok && lp <= l0; ++lp)
            for (long l = comp.first; l < lp; ++l)
                if (u[l] > u[lp] + mp.beta) {
                    ok = false;
                    break;
                }
        for (long l = l0; ok && l <= comp.second; ++l)
            for (long lp = l + 1; lp <= comp.second; ++lp)
                if (u[l] < u[lp] - mp.beta) {
                    ok = false;
                    break;
                }
        if (ok) {
            out.kind = BumpKind::single_bump_regular;
            out.peak_index = l0;
            return out;
        }
    }
    out.kind = BumpKind::single_bump_nonregular;
    return out;
}

std::pair<ShapeField, TransformCertificate> merge_bumps(const ShapeField& v,
                                                        const Nonlinearity& nl,
                                                        const MacroParams& mp) {
    if (classify(v, nl, mp).kind != BumpKind::multi_bump)
        throw MacrostateError("merge_bumps: input is not multi-bump");

    const double inv_h2 = 1.0 / (v.params().h * v.params().h);
    ShapeField u = v;
    TransformCertificate cert;
    cert.bound_satisfied = true;
    double J_prev = internal_energy(u, nl);
    const double J_in = J_prev;

    while (true) {
        const auto rs = region_split(u, nl);
        const auto tall = tall_components(u, rs, mp.alpha);
        if (tall.size() < 2) break;

        const long b1 = tall[0].first;
        const long b2 = tall[1].first;
        const long a1 = b1 - 1;
        const long a2 = b2 - 1;
        const double claim =
            2.0 * inv_h2 *
            std::pow(std::min(u[b1], u[b2]) - std::max(u.at(a1), u.at(a2)), 2);

        std::reverse(u.values().begin() + (b1 - u.lo()),
                     u.values().begin() + (a2 - u.lo() + 1));

        const double J_now = internal_energy(u, nl);
        cert.dJ_claimed += claim;
        if (!(J_prev - J_now >= claim - kSlack)) cert.bound_satisfied = false;
        J_prev = J_now;
        ++cert.iterations;
    }

    cert.dJ_actual = J_in - J_prev;
    cert.dC_actual = charge(u) - charge(v);
    return {std::move(u), cert};
}

std::pair<ShapeField, TransformCertificate> regularize_bump(
    const ShapeField& v, const Nonlinearity& nl, const MacroParams& mp) {
    if (classify(v, nl, mp).kind != BumpKind::single_bump_nonregular)
        throw MacrostateError("regularize_bump: input is not a nonregular single bump");

    const double h2 = v.params().h * v.params().h;
    const double sigma_sq = charge(v);
    const double claim_per_iter = nl.s0 * mp.beta * mp.beta / (h2 * sigma_sq);

    ShapeField u = v;
    TransformCertificate cert;
    const double J_in = internal_energy(u, nl);

    // one unimodal rearrangement of the tall component: ascending up to the
    // first global peak, descending after it. The flank minima stay at the
    // component edges, so the two boundary difference terms cannot grow, and
    // any beta violation is an inversion inside one flank removed by the
    // sort. This realizes the guaranteed decrease in a single pass.
    const auto comp = *classify(u, nl, mp).tall_component;
    long peak = comp.first;
    for (long l = comp.first; l <= comp.second; ++l)
        if (u[l] > u[peak]) peak = l;
    std::sort(u.values().begin() + (comp.first - u.lo()),
              u.values().begin() + (peak - u.lo() + 1));
    std::sort(u.values().begin() + (peak - u.lo() + 1),
              u.values().begin() + (comp.second - u.lo() + 1),
              std::greater<double>());
    cert.iterations = 1;

    if (classify(u, nl, mp).kind != BumpKind::single_bump_regular)
        throw MacrostateError("regularize_bump: rearrangement left a nonregular bump");

    const double J_out = internal_energy(u, nl);
    cert.dJ_claimed = claim_per_iter;
    cert.bound_satisfied = J_in - J_out >= claim_per_iter - kSlack;
    cert.dJ_actual = J_in - J_out;
    cert.dC_actual = charge(u) - charge(v);
    return {std::move(u), cert};
}

DilationResult dilate_minus(const ShapeField& u, const Nonlinearity& nl,
                            double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw MacrostateError("dilate_minus: gamma must be in (0, 1)");
    const auto rs = region_split(u, nl);
    if (rs.minus.empty()) throw MacrostateError("dilate_minus: U^- is empty");

    DilationResult out{u, 0.0, 0.0, 0};
    double charge_minus = 0.0;
    for (long l : rs.minus) {
        charge_minus += u[l] * u[l];
        out.u[l] = gamma * u[l];
        if (out.u[l] * out.u[l] <= nl.s0) ++out.ejected;
    }
    out.q = (1.0 - gamma * gamma) * charge_minus;
    const double jm_before = split_energy(u, nl).second;
    const double jm_after = split_energy(out.u, nl).second;
    out.dJ_minus = jm_after - jm_before;
    return out;
}

void TheoremParams::validate(double sigma_sq, double h, const Nonlinearity& nl,
                             double alpha, double beta) const {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw MacrostateError("theorem params: gamma must be in (0, 1)");
    if (!(alpha > nl.s0) || !(beta > 0.0) || !(beta < alpha - nl.s0))
        throw MacrostateError("theorem params: need alpha > s0 and beta in (0, alpha - s0)");
    const double mu_cap =
        std::min({(1.0 - gamma * gamma) * nl.s0 / (h * h),
                  nl.s0 * beta * beta / (2.0 * sigma_sq), alpha - beta - nl.s0});
    if (!(mu > 0.0) || mu > mu_cap + kSlack)
        throw MacrostateError("theorem params: mu violates the admissibility cap");
    if (N < 1 || n < 1 || a < 1)
        throw MacrostateError("theorem params: N, n, a must be >= 1");
    const double base = sigma_sq / (static_cast<double>(N) * N) *
                        static_cast<double>(a) * static_cast<double>(a);
    if (base > nl.s1)
        throw MacrostateError("theorem params: (sigma^2/N^2) a^2 exceeds s1");
    const double lhs =
        static_cast<double>(n + 1) * (base / (h * h) + std::abs(nl.F(base)));
    if (lhs > mu + kSlack)
        throw MacrostateError("theorem params: tail energy budget exceeds mu");
}

std::pair<ShapeField, TransformCertificate> grow_tail(
    const ShapeField& v, const Nonlinearity& nl, const CodingParams& cp,
    const TheoremParams& tp, const ComplexityEstimator& est) {
    const double h = v.params().h;
    if (cp.N != tp.N)
        throw MacrostateError("grow_tail: coding N must match the tail parameter N");
    // admissibility: only the tail energy budget matters here
    {
        const double base = cp.sigma * cp.sigma /
                            (static_cast<double>(tp.N) * tp.N) *
                            static_cast<double>(tp.a) * static_cast<double>(tp.a);
        if (base > nl.s1)
            throw MacrostateError("grow_tail: (sigma^2/N^2) a^2 exceeds s1");
        const double lhs = static_cast<double>(tp.n + 1) *
                           (base / (h * h) + std::abs(nl.F(base)));
        if (lhs > tp.mu + kSlack)
            throw MacrostateError("grow_tail: tail energy budget exceeds mu");
    }
    long n_tail = tp.n % 2 == 0 ? tp.n : tp.n - 1; // zero-sum walk needs even length
    if (n_tail < 2) throw MacrostateError("grow_tail: n too small for a zero-sum tail");

    const auto sc_in = encode(v, cp);
    const auto rs_in = region_split(v, nl);
    const std::string s_plus_in = split_by_region(sc_in, rs_in).s_plus;

    long last_nonzero = v.lo() - 1;
    for (long l = v.lo(); l <= v.hi(); ++l)
        if (v[l] != 0.0) last_nonzero = l;
    long k1 = last_nonzero;
    if (sc_in.window) k1 = std::max(k1, sc_in.window->second);
    const long tail_start = k1 + 2; // one zero gap keeps the first jump exact

    auto rng = make_rng(tp.tail_seed, 0);
    const double step = cp.sigma / static_cast<double>(tp.N);

    ShapeField best;
    TransformCertificate cert;
    bool have_best = false;
    const int attempts = tp.a == 1 ? 1 : 16;

    for (int attempt = 0; attempt < attempts && !have_best; ++attempt) {
        // +-1 walk with partial sums in [0, a] and total 0
        std::vector<int> walk(static_cast<std::size_t>(n_tail));
        if (tp.a == 1) {
            for (long j = 0; j < n_tail; ++j) walk[j] = j % 2 == 0 ? 1 : -1;
        } else {
            for (int redraw = 0; redraw < 64; ++redraw) {
                long s = 0;
                for (long j = 0; j < n_tail; ++j) {
                    const long remaining = n_tail - j;
                    int sgn;
                    if (s == 0)
                        sgn = 1;
                    else if (s == tp.a || s >= remaining)
                        sgn = -1;
                    else
                        sgn = rng() & 1 ? 1 : -1;
                    walk[j] = sgn;
                    s += sgn;
                }
                if (s == 0) break;
            }
        }

        LatticeParams p = v.params();
        p.hi = std::max(p.hi, tail_start + n_tail + 1);
        ShapeField u(p);
        for (long l = v.lo(); l <= v.hi(); ++l) u[l] = v[l];
        long s = 0;
        for (long j = 0; j < n_tail; ++j) {
            s += walk[j];
            u[tail_start + j] = step * static_cast<double>(s);
        }

        const auto sc_out = encode(u, cp);
        const std::string s_plus_out =
            split_by_region(sc_out, region_split(u, nl)).s_plus;

        TransformCertificate c;
        c.dJ_claimed = tp.mu;
        c.dJ_actual = split_energy(u, nl).first - split_energy(v, nl).first;
        c.dC_actual = charge(u) - charge(v);
        c.dComplexity = static_cast<long>(est.eval(s_plus_out)) -
                        static_cast<long>(est.eval(s_plus_in));
        c.bound_satisfied = c.dJ_actual <= tp.mu + kSlack &&
                            c.dC_actual <= h * h * tp.mu + kSlack &&
                            c.dComplexity >= 1;
        c.iterations = attempt + 1;
        if (c.bound_satisfied || attempt == attempts - 1) {
            best = std::move(u);
            cert = c;
            have_best = true;
        }
    }
    return {std::move(best), cert};
}

ShapeField pad_charge(const ShapeField& u, double deficit, const Nonlinearity& nl,
                      const CodingParams& cp) {
    if (!(deficit > 0.0)) throw MacrostateError("pad_charge: deficit must be positive");
    // plateau height strictly below sigma/(2N) so every added difference
    // stays in the first bin and s is untouched
    const double cap = cp.sigma / (2.0 * cp.N);
    long n_pad = 0;
    while (deficit / static_cast<double>(2 * n_pad + 1) >= cap * cap) ++n_pad;

    const auto rs = region_split(u, nl);
    const long width = 2 * n_pad + 1;

    // find a run of zero sites, >= 10 sites away from U^- and bordered by
    // zeros, large enough for the plateau
    long run_start = 0, run_len = 0;
    long chosen = 0;
    bool found = false;
    for (long l = u.lo(); l <= u.hi() && !found; ++l) {
        if (u[l] == 0.0) {
            if (run_len == 0) run_start = l;
            ++run_len;
            if (run_len >= width + 2) {
                const long c = run_start + 1 + n_pad;
                bool far = true;
                for (const auto& [b, e] : rs.components)
                    if (std::min(std::abs(c - n_pad - e), std::abs(b - (c + n_pad))) <
                        10) {
                        far = false;
                        break;
                    }
                if (far) {
                    chosen = c;
                    found = true;
                }
            }
        } else {
            run_len = 0;
        }
    }
    ShapeField out = u;
    if (!found) {
        // no room inside the current truncation window; the lattice itself is
        // infinite, so widen the window and place the plateau past the support
        long last_nonzero = u.lo();
        for (long l = u.lo(); l <= u.hi(); ++l)
            if (u[l] != 0.0) last_nonzero = l;
        LatticeParams p = u.params();
        p.hi = last_nonzero + 10 + width + 1;
        ShapeField grown(p);
        for (long l = u.lo(); l <= u.hi(); ++l) grown[l] = u[l];
        out = std::move(grown);
        chosen = last_nonzero + 11 + n_pad;
    }
    const double eps = std::sqrt(deficit / static_cast<double>(width));
    for (long l = chosen - n_pad; l <= chosen + n_pad; ++l) out[l] = eps;
    return out;
}

TheoremParams admissible_params(double sigma, double h, const Nonlinearity& nl,
                                double alpha, double beta,
                                std::uint64_t calibration_seed) {
    if (!(alpha > nl.s0) || !(beta > 0.0) || !(beta < alpha - nl.s0))
        throw MacrostateError(
            "admissible_params: need alpha > s0 and beta in (0, alpha - s0)");
    const double sigma_sq = sigma * sigma;
    const double cap_f =
        std::min(0.5 * nl.s0 * beta * beta / sigma_sq, alpha - beta - nl.s0);

    // calibration ensemble for the dilation energy response
    LatticeParams cal{h, -256, 255, Boundary::zero};
    auto rng = make_rng(calibration_seed, 1);
    std::vector<ShapeField> ensemble;
    for (int i = 0; i < 128; ++i)
        ensemble.push_back(sample_hylomorphic(cal, sigma_sq, nl, rng));

    // start where the first two mu branches balance, then move gamma toward 1
    // until >= 99% of the calibration dilations respect the f(gamma) cap
    const double gap0 = std::min(beta * beta / (2.0 * sigma_sq), 0.5);
    double gamma = 0.0;
    bool calibrated = false;
    for (int k = 0; k <= 12 && !calibrated; ++k) {
        gamma = std::sqrt(1.0 - gap0 / std::pow(2.0, k));
        int ok = 0;
        for (const auto& u : ensemble)
            if (dilate_minus(u, nl, gamma).dJ_minus <= cap_f) ++ok;
        calibrated =
            ok >= static_cast<int>(std::ceil(0.99 * static_cast<double>(ensemble.size())));
    }
    if (!calibrated)
        throw MacrostateError("admissible_params: gamma calibration failed");

    TheoremParams tp;
    tp.gamma = gamma;
    tp.mu = std::min({(1.0 - gamma * gamma) * nl.s0 / (h * h),
                      nl.s0 * beta * beta / (2.0 * sigma_sq),
                      alpha - beta - nl.s0});

    // smallest N at a = 1 whose tail budget admits a usefully long walk
    const long n_target = 16;
    const long n_min_by_s1 =
        static_cast<long>(std::ceil(sigma / std::sqrt(nl.s1)));
    for (long N = std::max(1L, n_min_by_s1); N <= 1000000L; ++N) {
        const double base = sigma_sq / (static_cast<double>(N) * N);
        if (base > nl.s1) continue;
        const double per = base / (h * h) + std::abs(nl.F(base));
        const long n_max = static_cast<long>(std::floor(tp.mu / per)) - 1;
        if (n_max >= n_target) {
            tp.N = static_cast<int>(N);
            tp.n = n_max % 2 == 0 ? n_max : n_max - 1;
            tp.a = 1;
            return tp;
        }
    }
    throw MacrostateError("admissible_params: no admissible N below 10^6");
}

std::pair<ShapeField, ChainReport> theorem_chain(
    const ShapeField& v, const Nonlinearity& nl, const MacroParams& mp,
    const TheoremParams& tp, const CodingParams& cp,
    const ComplexityEstimator& est) {
    ChainReport rep;
    const auto kind0 = classify(v, nl, mp).kind;
    if (kind0 != BumpKind::multi_bump && kind0 != BumpKind::single_bump_nonregular)
        throw MacrostateError("theorem_chain: input must be multi-bump or nonregular");
    rep.J_in = internal_energy(v, nl);
    rep.C_in = charge(v);
    if (!(rep.J_in <= mp.m) || !(mp.m < 0.0))
        throw MacrostateError("theorem_chain: requires J(v) <= m < 0");
    if (std::abs(rep.C_in - mp.sigma * mp.sigma) > 1e-10)
        throw MacrostateError("theorem_chain: requires C(v) = sigma^2");

    // the complexity conclusion is read at the resolution the tail was built
    // for, so the chain codes with N from the admissible parameters
    const CodingParams th_cp{cp.sigma, tp.N};
    rep.K_plus_in = information_content_split(v, nl, th_cp, est).first;
    const double cap_f = std::min(0.5 * nl.s0 * mp.beta * mp.beta / rep.C_in,
                                  mp.alpha - mp.beta - nl.s0);

    ShapeField cur = v;
    auto run_stage = [&](const std::string& name, auto&& fn) {
        if (!rep.failed_stage.empty()) return;
        try {
            fn();
        } catch (const std::exception&) {
            rep.failed_stage = name;
        }
    };

    run_stage("merge_bumps", [&] {
        if (classify(cur, nl, mp).kind != BumpKind::multi_bump) return;
        auto [u, cert] = merge_bumps(cur, nl, mp);
        cur = std::move(u);
        rep.stages.push_back({"merge_bumps", cert});
        if (!cert.bound_satisfied) rep.failed_stage = "merge_bumps";
    });
    run_stage("regularize_bump", [&] {
        if (classify(cur, nl, mp).kind != BumpKind::single_bump_nonregular) return;
        auto [u, cert] = regularize_bump(cur, nl, mp);
        cur = std::move(u);
        rep.stages.push_back({"regularize_bump", cert});
        if (!cert.bound_satisfied) rep.failed_stage = "regularize_bump";
    });
    run_stage("dilate_minus", [&] {
        auto res = dilate_minus(cur, nl, tp.gamma);
        TransformCertificate cert;
        cert.dJ_claimed = cap_f;
        cert.dJ_actual = res.dJ_minus;
        cert.dC_actual = -res.q;
        cert.bound_satisfied = res.dJ_minus <= cap_f + kSlack && res.ejected == 0;
        rep.stages.push_back({"dilate_minus", cert});
        cur = std::move(res.u);
        if (!cert.bound_satisfied ||
            classify(cur, nl, mp).kind == BumpKind::no_bump)
            rep.failed_stage = "dilate_minus";
    });
    run_stage("grow_tail", [&] {
        auto [u, cert] = grow_tail(cur, nl, th_cp, tp, est);
        cur = std::move(u);
        rep.stages.push_back({"grow_tail", cert});
        if (!cert.bound_satisfied) rep.failed_stage = "grow_tail";
    });
    run_stage("pad_charge", [&] {
        const double deficit = rep.C_in - charge(cur);
        TransformCertificate cert;
        if (!(deficit > 0.0)) {
            rep.failed_stage = "pad_charge";
            return;
        }
        const auto s_before = encode(cur, th_cp).s_string;
        auto padded = pad_charge(cur, deficit, nl, th_cp);
        cert.dC_actual = charge(padded) - charge(cur);
        cert.dJ_actual = internal_energy(cur, nl) - internal_energy(padded, nl);
        cert.bound_satisfied = encode(padded, th_cp).s_string == s_before &&
                               std::abs(cert.dC_actual - deficit) <= 1e-10;
        cur = std::move(padded);
        rep.stages.push_back({"pad_charge", cert});
        if (!cert.bound_satisfied) rep.failed_stage = "pad_charge";
    });

    rep.J_out = internal_energy(cur, nl);
    rep.C_out = charge(cur);
    rep.K_plus_out = information_content_split(cur, nl, th_cp, est).first;
    rep.final_kind = classify(cur, nl, mp).kind;

    if (rep.failed_stage.empty()) {
        if (std::abs(rep.C_out - rep.C_in) > 1e-10)
            rep.failed_stage = "verify:charge";
        else if (!(rep.J_out <= rep.J_in + kSlack))
            rep.failed_stage = "verify:energy";
        else if (rep.K_plus_out < rep.K_plus_in + 1)
            rep.failed_stage = "verify:complexity";
        else if (rep.final_kind != BumpKind::single_bump_regular)
            rep.failed_stage = "verify:macrostate";
    }
    rep.passed = rep.failed_stage.empty();
    return {std::move(cur), rep};
}

void write_chain_report_csv(std::ostream& os, const ChainReport& r) {
    os << "stage,dJ_claimed,dJ_actual,dC,dComplexity,bound_satisfied\n";
    char buf[256];
    for (const auto& st : r.stages) {
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%ld,%d\n",
                      st.name.c_str(), st.cert.dJ_claimed, st.cert.dJ_actual,
                      st.cert.dC_actual, st.cert.dComplexity,
                      st.cert.bound_satisfied ? 1 : 0);
        os << buf;
    }
}

} // namespace solcomp

// SPDX-License-Identifier: Apache-2.0
//
// irsobf - opportunistic beamforming through intelligent reflecting surfaces
// Copyright (C) 2026 The irsobf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsobf/simulate.hpp"

#include <cmath>
#include <span>

#include "irsobf/irs.hpp"
#include "irsobf/scaling.hpp"

namespace irsobf {

std::vector<Point> place_users(const Scenario& scenario, std::uint64_t trial)
{
    const Region& r = scenario.region;
    auto draw = [&](Rng& rng) {
        std::uniform_real_distribution<double> x(r.x_min, r.x_max);
        std::uniform_real_distribution<double> y(r.y_min, r.y_max);
        const double px = x(rng);
        return Point{px, y(rng)};
    };

    std::vector<Point> out(scenario.n_users);
    switch (scenario.placement) {
    case Placement::uniform:
        for (std::size_t k = 0; k < out.size(); ++k) {
            Rng rng = make_stream(scenario.seed, trial, StreamTag::placement, k);
            out[k] = draw(rng);
        }
        break;
    case Placement::common: {
        Rng rng = make_stream(scenario.seed, trial, StreamTag::placement, 0);
        std::fill(out.begin(), out.end(), draw(rng));
        break;
    }
    case Placement::fixed:
        std::fill(out.begin(), out.end(), scenario.user_position);
        break;
    }
    return out;
}

namespace {

/// Small-scale state of one user, already scaled by the path loss:
/// h_k = v^T cascade + direct.
struct UserLink {
    ComplexVector h2;
    cplx hd;
    ComplexVector cascade;
    cplx direct;
};

/// The channel side of a trial: geometry, h1, correlation and per-user draws.
class TrialChannels {
public:
    TrialChannels(const Scenario& sc, std::uint64_t trial, TrialResult& out)
        : sc_(sc), trial_(trial), n_(static_cast<Eigen::Index>(sc.n_elements))
    {
        Geometry geo{sc.bs, sc.irs, place_users(sc, trial)};
        out.positions = geo.users;
        out.pl = path_loss(geo, sc.path_loss);
        pl_ = out.pl;
        if (n_ > 0) {
            const double angle = sc.los_angle.value_or(los_angle_from_geometry(sc.bs, sc.irs));
            h1_ = los_bs_irs(n_, sc.spacing_d, angle);
            corr_ = exp_correlation(n_, sc.regime.correlation_eta);
            process_.emplace(1, corr_, sc.regime);
        }
        links_.resize(sc.n_users);
        user_rngs_.reserve(sc.n_users);
        for (std::size_t k = 0; k < sc.n_users; ++k) {
            user_rngs_.push_back(make_stream(sc.seed, trial, StreamTag::user_state, k));
        }
    }

    [[nodiscard]] bool has_irs() const noexcept { return n_ > 0; }
    [[nodiscard]] Eigen::Index n_elements() const noexcept { return n_; }
    [[nodiscard]] const ComplexVector& h1() const noexcept { return h1_; }
    [[nodiscard]] const HermitianMatrix& corr() const noexcept { return corr_; }
    [[nodiscard]] const UserLink& link(std::size_t k) const { return links_[k]; }
    [[nodiscard]] std::size_t n_users() const noexcept { return links_.size(); }

    /// One (h2, hd) draw; h2 first, then hd.
    std::pair<ComplexVector, cplx> draw_state(Rng& rng) const
    {
        ComplexVector h2 = process_ ? process_->draw_h2(rng) : ComplexVector();
        const cplx hd = sample_complex_gaussian(rng);
        return {std::move(h2), hd};
    }

    /// Draws a pool of M discrete states from the trial's pool stream.
    void draw_pool(std::size_t m)
    {
        Rng rng = make_stream(sc_.seed, trial_, StreamTag::state_pool, 0);
        pool_.clear();
        pool_.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            pool_.push_back(draw_state(rng));
        }
    }

    [[nodiscard]] const std::vector<std::pair<ComplexVector, cplx>>& pool() const noexcept { return pool_; }
    [[nodiscard]] const std::vector<std::size_t>& pool_index() const noexcept { return pool_index_; }

    /// Slow fading: every user's state for the whole trial. With a pool, users
    /// pick a pool entry uniformly; otherwise they draw their own state.
    void draw_slow_states()
    {
        if (!pool_.empty()) {
            pool_index_.resize(links_.size());
            for (std::size_t k = 0; k < links_.size(); ++k) {
                pool_index_[k] = random_stationary_index(user_rngs_[k], pool_.size());
                set_state(k, pool_[pool_index_[k]].first, pool_[pool_index_[k]].second);
            }
        } else {
            redraw_all();
        }
    }

    /// Fast fading: fresh independent state for every user.
    void redraw_all()
    {
        for (std::size_t k = 0; k < links_.size(); ++k) {
            auto [h2, hd] = draw_state(user_rngs_[k]);
            set_state(k, std::move(h2), hd);
        }
    }

    /// Complex gain of user k under IRS weights `v` (nullptr: no reflection).
    [[nodiscard]] cplx gain(std::size_t k, const PhaseVector* v) const
    {
        const UserLink& l = links_[k];
        if (!v || !has_irs()) {
            return l.direct;
        }
        return (v->weights().array() * l.cascade.array()).sum() + l.direct;
    }

    [[nodiscard]] LinkBudget budget(std::size_t k, double alpha) const
    {
        return LinkBudget{sc_.power_w, sc_.noise_w(), alpha, pl_[k].beta_r, pl_[k].beta_d};
    }

private:
    void set_state(std::size_t k, ComplexVector h2, cplx hd)
    {
        UserLink& l = links_[k];
        l.h2 = std::move(h2);
        l.hd = hd;
        if (has_irs()) {
            l.cascade = std::sqrt(pl_[k].beta_r) * h1_.cwiseProduct(l.h2);
        }
        l.direct = std::sqrt(pl_[k].beta_d) * hd;
    }

    const Scenario& sc_;
    std::uint64_t trial_;
    Eigen::Index n_;
    std::vector<PathLossFactors> pl_;
    ComplexVector h1_;
    HermitianMatrix corr_;
    std::optional<RayleighProcess> process_;
    std::vector<UserLink> links_;
    std::vector<Rng> user_rngs_;
    std::vector<std::pair<ComplexVector, cplx>> pool_;
    std::vector<std::size_t> pool_index_;
};

PhaseVector maybe_quantize(PhaseVector pv, int bits)
{
    return bits > 0 ? quantize_phases(pv, bits) : pv;
}

/// SNR and rate of every user under one IRS configuration.
struct RateTable {
    std::vector<double> snrs;
    std::vector<double> rates;

    void resize(std::size_t k)
    {
        snrs.resize(k);
        rates.resize(k);
    }
    void set(std::size_t k, cplx h, double power_w, double noise_w)
    {
        snrs[k] = snr(h, power_w, noise_w);
        rates[k] = rate_of(snrs[k]);
    }
};

AnalyticKind resolve_analytic(const Scenario& sc)
{
    if (sc.analytic != AnalyticKind::automatic) {
        return sc.analytic;
    }
    const StrategyKind s = sc.strategy.kind;
    if (sc.regime.kind == FadingKind::slow && (s == StrategyKind::coherent || s == StrategyKind::stationary_random)) {
        return AnalyticKind::limit;
    }
    if (sc.regime.kind == FadingKind::fast && sc.n_elements > 0 && sc.n_users >= 2 &&
        (s == StrategyKind::eigen_deterministic || s == StrategyKind::uniform_random)) {
        return AnalyticKind::scaling_law;
    }
    return AnalyticKind::none;
}

/// Array gain entering the extreme-value law for the scenario's strategy:
/// the eigen design reaches zeta(R_bar); phases independent of R_bar give N on
/// average; without reflection the IRS term vanishes.
double strategy_zeta(const Scenario& sc, const TrialChannels& ch)
{
    if (!ch.has_irs() || sc.strategy.kind == StrategyKind::off) {
        return 0.0;
    }
    if (sc.strategy.kind == StrategyKind::eigen_deterministic) {
        return zeta(r_bar(ch.h1(), ch.corr())).zeta;
    }
    return static_cast<double>(sc.n_elements);
}

std::optional<double> analytic_reference(const Scenario& sc, const TrialChannels& ch, const TrialResult& res)
{
    const AnalyticKind kind = resolve_analytic(sc);
    const std::size_t K = sc.n_users;
    switch (kind) {
    case AnalyticKind::automatic:
    case AnalyticKind::none:
        return std::nullopt;
    case AnalyticKind::limit:
        if (res.bf_rates.empty()) {
            return std::nullopt;
        }
        return asymptotic_limit(res.bf_rates);
    case AnalyticKind::scaling_law:
    case AnalyticKind::exact_max: {
        if (kind == AnalyticKind::scaling_law && K < 2) {
            return std::nullopt;
        }
        const double z = strategy_zeta(sc, ch);
        const double alpha = z > 0.0 ? sc.alpha : 0.0;
        double acc = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            const LinkBudget lb = ch.budget(k, alpha);
            if (kind == AnalyticKind::scaling_law) {
                acc += scaling_law(static_cast<double>(K), z, lb);
            } else {
                const double mean = lb.snr_scale() * (lb.beta_r * alpha * alpha * z + lb.beta_d);
                acc += exact_max_expectation(K, mean);
            }
        }
        return acc / static_cast<double>(K);
    }
    }
    return std::nullopt;
}

} // namespace

TrialResult run_frames(const Scenario& sc, std::uint64_t trial, const RunOptions& options)
{
    sc.validate();
    const std::size_t K = sc.n_users;
    const bool slow = sc.regime.kind == FadingKind::slow;
    const StrategyKind kind = sc.strategy.kind;
    const int bits = sc.strategy.quant_bits;
    const double P = sc.power_w;
    const double noise = sc.noise_w();

    TrialResult out;
    TrialChannels ch(sc, trial, out);

    if (ch.has_irs() && sc.state_pool > 0 && (slow || kind == StrategyKind::stationary_random)) {
        ch.draw_pool(sc.state_pool);
    }
    if (slow) {
        ch.draw_slow_states();
    }

    // Per-user coherent-beamforming rates of the trial's slow-fading state.
    if (slow) {
        out.bf_rates.resize(K);
        for (std::size_t k = 0; k < K; ++k) {
            const UserLink& l = ch.link(k);
            if (ch.has_irs()) {
                out.bf_rates[k] = coherent_rate(ch.h1(), l.h2, l.hd, ch.budget(k, sc.alpha));
            } else {
                out.bf_rates[k] = rate_of(snr(l.direct, P, noise));
            }
        }
    }

    // Finite configuration list for the random-stationary strategy: the BF
    // configurations of the pool states, or of the users themselves.
    std::vector<PhaseVector> configs;
    if (kind == StrategyKind::stationary_random) {
        if (!ch.pool().empty()) {
            for (const auto& [h2, hd] : ch.pool()) {
                configs.push_back(maybe_quantize(coherent_phases(ch.h1(), h2, hd, sc.alpha), bits));
            }
        } else {
            for (std::size_t k = 0; k < K; ++k) {
                configs.push_back(
                    maybe_quantize(coherent_phases(ch.h1(), ch.link(k).h2, ch.link(k).hd, sc.alpha), bits));
            }
        }
    }

    // Configuration each user would be served with under the genie baseline.
    std::vector<PhaseVector> user_configs;
    if (sc.scheduler.kind == SchedulerKind::genie) {
        user_configs.reserve(K);
        for (std::size_t k = 0; k < K; ++k) {
            user_configs.push_back(ch.pool().empty() ? configs[k] : configs[ch.pool_index()[k]]);
        }
    }

    std::optional<PhaseVector> fixed_config;
    if (ch.has_irs()) {
        if (kind == StrategyKind::off) {
            fixed_config = PhaseVector::off(sc.n_elements);
        } else if (kind == StrategyKind::eigen_deterministic) {
            fixed_config = maybe_quantize(deterministic_eigen_design(r_bar(ch.h1(), ch.corr()), sc.alpha), bits);
        }
    }

    std::vector<Rng> csi_rngs;
    if (kind == StrategyKind::imperfect_csi) {
        for (std::size_t k = 0; k < K; ++k) {
            csi_rngs.push_back(make_stream(sc.seed, trial, StreamTag::csi_error, k));
        }
    }
    const ImperfectCsiConfig csi{sc.strategy.epsilon};

    // Rates when every user is served with its own (possibly imperfect) configuration.
    auto fill_own_config = [&](RateTable& t) {
        t.resize(K);
        for (std::size_t k = 0; k < K; ++k) {
            const UserLink& l = ch.link(k);
            if (!ch.has_irs()) {
                t.set(k, l.direct, P, noise);
                continue;
            }
            PhaseVector v = kind == StrategyKind::imperfect_csi
                                ? imperfect_csi_phases(csi_rngs[k], ch.h1(), l.h2, l.hd, csi, sc.alpha)
                                : coherent_phases(ch.h1(), l.h2, l.hd, sc.alpha);
            v = maybe_quantize(std::move(v), bits);
            t.set(k, ch.gain(k, &v), P, noise);
        }
    };
    auto fill_config = [&](RateTable& t, const PhaseVector* v) {
        t.resize(K);
        for (std::size_t k = 0; k < K; ++k) {
            t.set(k, ch.gain(k, v), P, noise);
        }
    };

    const bool own_config = kind == StrategyKind::coherent || kind == StrategyKind::imperfect_csi;
    const bool constant_rates = slow && kind != StrategyKind::uniform_random && kind != StrategyKind::stationary_random;
    RateTable constant;
    if (constant_rates) {
        own_config ? fill_own_config(constant) : fill_config(constant, fixed_config ? &*fixed_config : nullptr);
    }
    // Slow fading with a finite list: rates per list entry, filled on first use.
    std::vector<std::optional<RateTable>> cache(slow ? configs.size() : 0);

    Rng irs_rng = make_stream(sc.seed, trial, StreamTag::irs, 0);
    RateTable scratch;

    SchedulerState report = SchedulerState::infinite(K);
    std::optional<SchedulerState> pf_window;
    if (sc.scheduler.kind == SchedulerKind::pf) {
        pf_window = SchedulerState::finite(K, sc.scheduler.window);
    }
    RoundRobinState rr(K);

    out.schedule_counts.assign(K, 0);
    if (options.keep_trace) {
        out.trace.reserve(sc.frames);
    }
    double total = 0.0;

    for (std::uint64_t f = 0; f < sc.frames; ++f) {
        if (!slow) {
            ch.redraw_all();
        }

        const RateTable* table = &constant;
        const PhaseVector* current = nullptr;
        if (!constant_rates) {
            if (kind == StrategyKind::stationary_random) {
                const std::size_t j = random_stationary_index(irs_rng, configs.size());
                current = &configs[j];
                if (slow) {
                    if (!cache[j]) {
                        cache[j].emplace();
                        fill_config(*cache[j], current);
                    }
                    table = &*cache[j];
                } else {
                    fill_config(scratch, current);
                    table = &scratch;
                }
            } else if (kind == StrategyKind::uniform_random) {
                const PhaseVector v = maybe_quantize(uniform_random_phases(irs_rng, sc.n_elements, sc.alpha), bits);
                fill_config(scratch, &v);
                table = &scratch;
            } else if (own_config) {
                fill_own_config(scratch);
                table = &scratch;
            } else {
                fill_config(scratch, fixed_config ? &*fixed_config : nullptr);
                table = &scratch;
            }
        }

        std::optional<std::size_t> user;
        switch (sc.scheduler.kind) {
        case SchedulerKind::os:
            user = opportunistic_schedule(table->snrs);
            break;
        case SchedulerKind::pf:
            user = pf_schedule(table->rates, *pf_window);
            break;
        case SchedulerKind::pf_inf:
            user = pf_schedule(table->rates, report);
            break;
        case SchedulerKind::genie:
            user = genie_class_match_schedule(*current, user_configs, rr);
            break;
        }

        const double rate = user ? table->rates[*user] : 0.0;
        update_throughput(report, user, rate);
        if (pf_window) {
            update_throughput(*pf_window, user, rate);
        }
        if (user) {
            ++out.schedule_counts[*user];
            total += rate;
        } else {
            ++out.idle_frames;
        }
        if (options.keep_trace) {
            out.trace.push_back(FrameOutcome{user, rate, table->snrs});
        }
    }

    out.sum_rate = total / static_cast<double>(sc.frames);
    out.throughputs = report.throughputs();
    out.analytic = analytic_reference(sc, ch, out);
    return out;
}

} // namespace irsobf

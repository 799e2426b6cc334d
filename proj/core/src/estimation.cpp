// SPDX-License-Identifier: Apache-2.0
//
// swseq - TX switching sequence design and evaluation for TDM MIMO channel sounders
// Copyright (C) 2026 swseq contributors
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

#include "swseq/estimation.hpp"

#include <algorithm>
#include <numeric>

#include "swseq/rng.hpp"

namespace swseq
{

    basis_derivatives basis_column_derivatives(const array_model &tx, const array_model &rx,
                                               const sounder_config &cfg, const arma::mat &eta,
                                               const path &p)
    {
        const timing &tm = cfg.tm;
        const arma::cx_vec b_tx = tx.response(p.phi_t_rad);
        const arma::cx_vec db_tx = tx.response_derivative(p.phi_t_rad);
        const arma::cx_vec b_rx = rx.response(p.phi_r_rad);
        const arma::cx_vec db_rx = rx.response_derivative(p.phi_r_rad);

        const arma::uword n_tm = tm.n_tx * tm.n_snap;
        arma::cx_vec ft(n_tm), dft_phi(n_tm), dft_nu(n_tm);
        for (arma::uword t = 0; t < tm.n_snap; ++t)
            for (arma::uword m = 0; m < tm.n_tx; ++m)
            {
                const cxd ph = std::polar(1.0, two_pi * p.nu_hz * eta(m, t));
                const arma::uword i = t * tm.n_tx + m;
                ft(i) = b_tx(m) * ph;
                dft_phi(i) = db_tx(m) * ph;
                dft_nu(i) = ft(i) * cxd(0.0, two_pi * eta(m, t));
            }

        arma::cx_vec fr(tm.n_rx), dfr_phi(tm.n_rx), dfr_nu(tm.n_rx);
        for (arma::uword r = 0; r < tm.n_rx; ++r)
        {
            const double tr = static_cast<double>(r) * tm.t0_s;
            const cxd ph = std::polar(1.0, two_pi * p.nu_hz * tr);
            fr(r) = b_rx(r) * ph;
            dfr_phi(r) = db_rx(r) * ph;
            dfr_nu(r) = fr(r) * cxd(0.0, two_pi * tr);
        }

        arma::cx_vec ff(tm.n_freq), dff_tau(tm.n_freq);
        for (arma::uword m = 0; m < tm.n_freq; ++m)
        {
            const double f = static_cast<double>(m) * cfg.delta_f_hz;
            ff(m) = std::polar(1.0, -two_pi * f * p.tau_s);
            dff_tau(m) = ff(m) * cxd(0.0, -two_pi * f);
        }

        const arma::cx_vec rf = arma::kron(fr, ff);
        basis_derivatives out;
        out.b = arma::kron(ft, rf);
        out.d.set_size(out.b.n_elem, 4);
        out.d.col(0) = arma::kron(ft, arma::kron(fr, dff_tau));
        out.d.col(1) = arma::kron(dft_phi, rf);
        out.d.col(2) = arma::kron(ft, arma::kron(dfr_phi, ff));
        out.d.col(3) = arma::kron(dft_nu, rf) + arma::kron(ft, arma::kron(dfr_nu, ff));
        return out;
    }

    fisher_information fim(const array_model &tx, const array_model &rx,
                           const sounder_config &cfg, const switching_schedule &schedule,
                           const path_set &paths, double sigma2)
    {
        if (!(sigma2 > 0.0))
            throw config_error("fim: noise variance must be positive");
        if (paths.empty())
            throw config_error("fim: need at least one path");
        cfg.validate();
        const arma::mat eta = eta_from_schedule(schedule);
        const arma::uword n = cfg.tm.n_freq * cfg.tm.n_rx * cfg.tm.n_tx * cfg.tm.n_snap;
        const arma::uword np = paths.size();

        arma::cx_mat d(n, 6 * np);
        for (arma::uword p = 0; p < np; ++p)
        {
            basis_derivatives bd = basis_column_derivatives(tx, rx, cfg, eta, paths[p]);
            const cxd g = paths[p].gain;
            d.col(6 * p + 0) = g * bd.d.col(0);
            d.col(6 * p + 1) = g * bd.d.col(1);
            d.col(6 * p + 2) = g * bd.d.col(2);
            d.col(6 * p + 3) = g * bd.d.col(3);
            d.col(6 * p + 4) = bd.b;
            d.col(6 * p + 5) = cxd(0.0, 1.0) * bd.b;
        }

        fisher_information f;
        f.sigma2 = sigma2;
        f.info = (2.0 / sigma2) * arma::real(d.t() * d);
        f.info = 0.5 * (f.info + f.info.t()); // enforce exact symmetry
        return f;
    }

    arma::vec crlb(const fisher_information &f)
    {
        arma::vec out(f.info.n_rows);
        arma::mat inv;
        bool ok = arma::inv_sympd(inv, f.info);
        if (!ok)
            ok = arma::inv(inv, f.info);
        if (!ok)
        {
            out.fill(arma::datum::inf);
            return out;
        }
        for (arma::uword i = 0; i < out.n_elem; ++i)
        {
            const double v = inv(i, i);
            out(i) = (v > 0.0 && std::isfinite(v)) ? std::sqrt(v) : arma::datum::inf;
        }
        return out;
    }

    search_config search_config::resolved(const sounder_config &cfg) const
    {
        search_config s = *this;
        if (s.tau_max_s <= 0.0)
            s.tau_max_s = cfg.unambiguous_delay_s() * (1.0 - 1e-9);
        if (s.delay_step_s <= 0.0)
            s.delay_step_s = 1.0 / (2.0 * cfg.bandwidth_hz());
        const double span = static_cast<double>(cfg.tm.n_snap) * cfg.tm.snapshot_s;
        if (s.doppler_step_hz <= 0.0)
            s.doppler_step_hz = 1.0 / (4.0 * span);
        if (s.tol_nu_hz <= 0.0)
            s.tol_nu_hz = 1e-4 / span;
        if (s.nu_min_hz == 0.0 && s.nu_max_hz == 0.0)
        {
            s.nu_max_hz = cfg.tm.nu_up_hz();
            s.nu_min_hz = -s.nu_max_hz;
        }
        return s;
    }

    search_config default_search(const sounder_config &cfg, bool scrambled)
    {
        search_config s;
        const double half = scrambled ? cfg.tm.nu_up_hz() : 1.0 / (2.0 * cfg.tm.snapshot_s);
        s.nu_min_hz = -half;
        s.nu_max_hz = half;
        return s.resolved(cfg);
    }

    namespace
    {
        struct residual_tensor
        {
            arma::cx_mat rows_by_freq; // (T*M_T*M_R) x M_f
        };

        residual_tensor reshape_residual(const arma::cx_vec &r, const timing &tm)
        {
            residual_tensor t;
            const arma::uword n_rows = tm.n_tx * tm.n_snap * tm.n_rx;
            t.rows_by_freq.set_size(n_rows, tm.n_freq);
            for (arma::uword a = 0; a < n_rows; ++a)
                for (arma::uword m = 0; m < tm.n_freq; ++m)
                    t.rows_by_freq(a, m) = r(a * tm.n_freq + m);
            return t;
        }

        // Coarse initialization: delay by noncoherent matched filtering, then a
        // joint (phi_T, nu) sweep with the RX dimension combined noncoherently
        // (the Doppler/DoD coupling is what the schedule design is about, so
        // those two must be searched together), then coherent RX beamforming.
        path coarse_search(const arma::cx_vec &residual, const array_model &tx,
                           const array_model &rx, const sounder_config &cfg,
                           const arma::mat &eta, const search_config &s)
        {
            const timing &tm = cfg.tm;
            const residual_tensor rt = reshape_residual(residual, tm);

            const arma::uword n_tau =
                static_cast<arma::uword>((s.tau_max_s - s.tau_min_s) / s.delay_step_s) + 1;
            arma::cx_mat fgrid(tm.n_freq, n_tau);
            for (arma::uword i = 0; i < n_tau; ++i)
            {
                const double tau = s.tau_min_s + static_cast<double>(i) * s.delay_step_s;
                for (arma::uword m = 0; m < tm.n_freq; ++m)
                    fgrid(m, i) = std::polar(1.0, two_pi * static_cast<double>(m) * cfg.delta_f_hz * tau);
            }
            const arma::cx_mat gated = rt.rows_by_freq * fgrid; // conj(b_f)^T r per delay
            const arma::vec p_tau = arma::sum(arma::square(arma::abs(gated)), 0).t();
            const arma::uword i_tau = p_tau.index_max();

            path est;
            est.tau_s = s.tau_min_s + static_cast<double>(i_tau) * s.delay_step_s;

            // delay-gated data, (M_T x M_R) per snapshot
            arma::cx_cube rg(tm.n_tx, tm.n_rx, tm.n_snap);
            for (arma::uword t = 0; t < tm.n_snap; ++t)
                for (arma::uword m = 0; m < tm.n_tx; ++m)
                    for (arma::uword r = 0; r < tm.n_rx; ++r)
                        rg(m, r, t) = gated((t * tm.n_tx + m) * tm.n_rx + r, i_tau);

            const arma::uword n_ang =
                static_cast<arma::uword>(std::round(two_pi / s.angle_step_rad));
            const arma::vec angles = azimuth_grid(n_ang);
            const arma::cx_mat bt = tx.response_grid(angles);
            const arma::vec bt_inv = 1.0 / arma::sum(arma::square(arma::abs(bt)), 0).t();

            const arma::uword n_nu =
                static_cast<arma::uword>((s.nu_max_hz - s.nu_min_hz) / s.doppler_step_hz) + 1;
            double best_score = -1.0;
            arma::uword best_a = 0;
            double best_nu = 0.0;
            arma::cx_mat q(tm.n_tx, tm.n_rx);
            for (arma::uword k = 0; k < n_nu; ++k)
            {
                const double nu = s.nu_min_hz + static_cast<double>(k) * s.doppler_step_hz;
                q.zeros();
                for (arma::uword t = 0; t < tm.n_snap; ++t)
                    for (arma::uword m = 0; m < tm.n_tx; ++m)
                    {
                        const cxd ph = std::polar(1.0, -two_pi * nu * eta(m, t));
                        for (arma::uword r = 0; r < tm.n_rx; ++r)
                            q(m, r) += ph * rg(m, r, t);
                    }
                const arma::cx_mat y = bt.t() * q; // n_ang x M_R
                const arma::vec score = arma::sum(arma::square(arma::abs(y)), 1) % bt_inv;
                const arma::uword a = score.index_max();
                if (score(a) > best_score)
                {
                    best_score = score(a);
                    best_a = a;
                    best_nu = nu;
                }
            }
            est.phi_t_rad = angles(best_a);
            est.nu_hz = best_nu;

            // coherent RX beamforming at the (phi_T, nu) winner
            arma::cx_vec qr(tm.n_rx, arma::fill::zeros);
            const arma::cx_vec bt_hat = tx.response(est.phi_t_rad);
            for (arma::uword t = 0; t < tm.n_snap; ++t)
                for (arma::uword m = 0; m < tm.n_tx; ++m)
                {
                    const cxd w = std::conj(bt_hat(m)) *
                                  std::polar(1.0, -two_pi * est.nu_hz * eta(m, t));
                    for (arma::uword r = 0; r < tm.n_rx; ++r)
                        qr(r) += w * rg(m, r, t);
                }
            const arma::cx_mat br = rx.response_grid(angles);
            double best_r = -1.0;
            for (arma::uword a = 0; a < n_ang; ++a)
            {
                cxd acc(0.0, 0.0);
                double nrm2 = 0.0;
                for (arma::uword r = 0; r < tm.n_rx; ++r)
                {
                    const cxd v = br(r, a) * std::polar(1.0, two_pi * est.nu_hz *
                                                                 static_cast<double>(r) * tm.t0_s);
                    acc += std::conj(v) * qr(r);
                    nrm2 += std::norm(v);
                }
                const double score = std::norm(acc) / nrm2;
                if (score > best_r)
                {
                    best_r = score;
                    est.phi_r_rad = angles(a);
                }
            }
            return est;
        }

        struct gn_status
        {
            unsigned iterations = 0;
            bool converged = false;
            double residual_norm = 0.0;
        };

        arma::cx_vec path_column(const array_model &tx, const array_model &rx,
                                 const sounder_config &cfg, const arma::mat &eta, const path &p)
        {
            basis_factors f = basis_column_factors(tx, rx, cfg, eta, p);
            return arma::kron(f.tx, arma::kron(f.rx, f.freq));
        }

        arma::cx_mat paths_matrix(const array_model &tx, const array_model &rx,
                                  const sounder_config &cfg, const arma::mat &eta,
                                  const std::vector<path> &paths)
        {
            arma::cx_mat b(cfg.tm.n_freq * cfg.tm.n_rx * cfg.tm.n_tx * cfg.tm.n_snap, paths.size());
            for (arma::uword i = 0; i < paths.size(); ++i)
                b.col(i) = path_column(tx, rx, cfg, eta, paths[i]);
            return b;
        }

        void clamp_to_search(path &p, const search_config &s)
        {
            p.tau_s = std::clamp(p.tau_s, s.tau_min_s, s.tau_max_s);
            p.phi_t_rad = wrap_angle(p.phi_t_rad);
            p.phi_r_rad = wrap_angle(p.phi_r_rad);
            p.nu_hz = std::clamp(p.nu_hz, s.nu_min_hz - s.doppler_step_hz,
                                 s.nu_max_hz + s.doppler_step_hz);
        }

        // Damped Gauss-Newton over the structural parameters of `paths`, complex
        // gains eliminated by least squares at every probe (variable projection).
        gn_status gauss_newton(std::vector<path> &paths, const arma::cx_vec &y,
                               const array_model &tx, const array_model &rx,
                               const sounder_config &cfg, const arma::mat &eta,
                               const search_config &s)
        {
            const arma::uword np = paths.size();
            gn_status st;

            auto solve_gains = [&](const arma::cx_mat &b, arma::cx_vec &gains, arma::cx_vec &resid) {
                gains = arma::solve(b, y);
                resid = y - b * gains;
                return std::pow(arma::norm(resid), 2);
            };

            arma::cx_mat b = paths_matrix(tx, rx, cfg, eta, paths);
            arma::cx_vec gains, resid;
            double cost = solve_gains(b, gains, resid);

            const arma::vec tol = {s.tol_tau_s, s.tol_angle_rad, s.tol_angle_rad, s.tol_nu_hz};
            for (unsigned it = 0; it < s.max_iterations; ++it)
            {
                st.iterations = it + 1;
                arma::cx_mat d(y.n_elem, 4 * np);
                for (arma::uword p = 0; p < np; ++p)
                {
                    basis_derivatives bd = basis_column_derivatives(tx, rx, cfg, eta, paths[p]);
                    d.cols(4 * p, 4 * p + 3) = gains(p) * bd.d;
                }
                const arma::mat h = arma::real(d.t() * d);
                const arma::vec g = arma::real(d.t() * resid);
                arma::vec step;
                if (!arma::solve(step, h, g, arma::solve_opts::likely_sympd + arma::solve_opts::no_approx))
                    break;

                double scale = 1.0;
                bool improved = false;
                std::vector<path> trial = paths;
                arma::cx_vec gains_n, resid_n;
                double cost_n = cost;
                for (int half = 0; half < 20; ++half)
                {
                    trial = paths;
                    for (arma::uword p = 0; p < np; ++p)
                    {
                        trial[p].tau_s += scale * step(4 * p + 0);
                        trial[p].phi_t_rad += scale * step(4 * p + 1);
                        trial[p].phi_r_rad += scale * step(4 * p + 2);
                        trial[p].nu_hz += scale * step(4 * p + 3);
                    }
                    const arma::cx_mat b_n = paths_matrix(tx, rx, cfg, eta, trial);
                    cost_n = solve_gains(b_n, gains_n, resid_n);
                    if (cost_n <= cost)
                    {
                        improved = true;
                        b = b_n;
                        break;
                    }
                    scale *= 0.5;
                }
                if (!improved)
                {
                    st.converged = true; // local optimum at tolerance scale
                    break;
                }
                paths = trial;
                gains = gains_n;
                resid = resid_n;
                cost = cost_n;

                bool small = true;
                for (arma::uword p = 0; p < np && small; ++p)
                    for (arma::uword q = 0; q < 4; ++q)
                        if (std::abs(scale * step(4 * p + q)) >= tol(q))
                        {
                            small = false;
                            break;
                        }
                if (small)
                {
                    st.converged = true;
                    break;
                }
            }
            for (arma::uword p = 0; p < np; ++p)
                paths[p].gain = gains(p);
            st.residual_norm = arma::norm(resid);
            return st;
        }
    } // namespace

    std::vector<path_estimate> estimate(const observation &obs, const array_model &tx,
                                        const array_model &rx, arma::uword n_paths,
                                        const search_config &search)
    {
        if (n_paths < 1)
            throw config_error("estimate: need at least one path");
        const sounder_config &cfg = obs.config;
        cfg.validate();
        const search_config s = search.resolved(cfg);
        const arma::mat eta = eta_from_schedule(obs.schedule);

        std::vector<path> paths;
        std::vector<gn_status> status;
        arma::cx_vec residual = obs.y;

        for (arma::uword k = 0; k < n_paths; ++k)
        {
            path init = coarse_search(residual, tx, rx, cfg, eta, s);
            std::vector<path> one = {init};
            gn_status st = gauss_newton(one, residual, tx, rx, cfg, eta, s);
            paths.push_back(one[0]);
            status.push_back(st);

            // re-solve all gains jointly and update the residual
            arma::cx_mat b = paths_matrix(tx, rx, cfg, eta, paths);
            arma::cx_vec gains = arma::solve(b, obs.y);
            for (arma::uword i = 0; i < paths.size(); ++i)
                paths[i].gain = gains(i);
            residual = obs.y - b * gains;
        }

        if (n_paths > 1)
        {
            gn_status joint = gauss_newton(paths, obs.y, tx, rx, cfg, eta, s);
            for (auto &st : status)
            {
                st.converged = st.converged && joint.converged;
                st.residual_norm = joint.residual_norm;
                st.iterations += joint.iterations;
            }
        }

        std::vector<path_estimate> out(paths.size());
        for (arma::uword i = 0; i < paths.size(); ++i)
        {
            path p = paths[i];
            clamp_to_search(p, s);
            out[i].p = p;
            out[i].iterations = status[i].iterations;
            out[i].residual_norm = status[i].residual_norm;
            out[i].converged = status[i].converged;
        }
        return out;
    }

    namespace
    {
        // greedy truth-to-estimate matching in scaled parameter distance
        std::vector<arma::uword> match_paths(const path_set &truth,
                                             const std::vector<path_estimate> &est,
                                             const sounder_config &cfg)
        {
            const double tau_scale = 1.0 / cfg.bandwidth_hz();
            const double nu_scale = 1.0 / (static_cast<double>(cfg.tm.n_snap) * cfg.tm.snapshot_s);
            std::vector<arma::uword> pick(truth.size());
            std::vector<bool> used(est.size(), false);
            for (std::size_t i = 0; i < truth.size(); ++i)
            {
                double best = arma::datum::inf;
                arma::uword best_j = 0;
                for (std::size_t j = 0; j < est.size(); ++j)
                {
                    if (used[j])
                        continue;
                    const double d =
                        std::pow((truth[i].tau_s - est[j].p.tau_s) / tau_scale, 2) +
                        std::pow(angle_distance(truth[i].phi_t_rad, est[j].p.phi_t_rad), 2) +
                        std::pow(angle_distance(truth[i].phi_r_rad, est[j].p.phi_r_rad), 2) +
                        std::pow((truth[i].nu_hz - est[j].p.nu_hz) / nu_scale, 2);
                    if (d < best)
                    {
                        best = d;
                        best_j = j;
                    }
                }
                pick[i] = best_j;
                used[best_j] = true;
            }
            return pick;
        }
    } // namespace

    std::vector<rmse_cell> montecarlo_rmse(const array_model &tx, const array_model &rx,
                                           const sounder_config &cfg, const path_set &scenario,
                                           const std::vector<switching_schedule> &schedules,
                                           const std::vector<double> &snr_db_list,
                                           arma::uword n_trials, std::uint64_t seed,
                                           unsigned workers)
    {
        if (n_trials < 1)
            throw config_error("montecarlo_rmse: n_trials must be >= 1");
        if (scenario.empty())
            throw config_error("montecarlo_rmse: scenario needs at least one path");

        arma::cx_vec gains(scenario.size());
        for (arma::uword i = 0; i < scenario.size(); ++i)
            gains(i) = scenario[i].gain;

        const char *names[4] = {"tau_ns", "phi_t_deg", "phi_r_deg", "nu_hz"};
        const double to_unit[4] = {1e9, 180.0 / pi, 180.0 / pi, 1.0};

        std::vector<rmse_cell> table;
        rng master(seed);

        for (std::size_t si = 0; si < schedules.size(); ++si)
        {
            const switching_schedule &sched = schedules[si];
            const bool scrambled = sched.label != "uniform" && sched.label.rfind("dense", 0) != 0;
            sounder_config cfg_s = cfg;
            cfg_s.tm = sched.tm; // dense schedules carry compressed timing
            const arma::cx_mat basis = basis_matrix(tx, rx, cfg_s, sched, scenario);
            const double energy = std::pow(arma::norm(basis * gains), 2);
            const double n_total = static_cast<double>(basis.n_rows);
            const search_config s = default_search(cfg_s, scrambled);

            for (std::size_t qi = 0; qi < snr_db_list.size(); ++qi)
            {
                const double snr_db = snr_db_list[qi];
                const double sigma2 = energy / (n_total * std::pow(10.0, snr_db / 10.0));
                const arma::vec bounds = crlb(fim(tx, rx, cfg_s, sched, scenario, sigma2));

                arma::mat sq_err(n_trials, 4, arma::fill::zeros);
                std::vector<unsigned> fails(n_trials, 0);
                const std::uint64_t cell_seed =
                    master.fork(si * 1000 + qi).seed();

                parallel_for(n_trials, workers, [&](std::size_t t0, std::size_t t1) {
                    for (std::size_t tr = t0; tr < t1; ++tr)
                    {
                        const std::uint64_t trial_seed = rng(cell_seed).fork(tr).seed();
                        observation obs = synthesize_observation(basis, gains, snr_db, trial_seed,
                                                                 cfg_s, sched);
                        std::vector<path_estimate> est;
                        try
                        {
                            est = estimate(obs, tx, rx, scenario.size(), s);
                        }
                        catch (const std::exception &)
                        {
                            fails[tr] = 1;
                            for (int q = 0; q < 4; ++q)
                                sq_err(tr, q) = arma::datum::nan;
                            continue;
                        }
                        const auto pick = match_paths(scenario, est, cfg_s);
                        for (std::size_t i = 0; i < scenario.size(); ++i)
                        {
                            const path &pe = est[pick[i]].p;
                            if (!est[pick[i]].converged)
                                fails[tr] = 1;
                            const double e[4] = {
                                pe.tau_s - scenario[i].tau_s,
                                wrap_angle(pe.phi_t_rad - scenario[i].phi_t_rad),
                                wrap_angle(pe.phi_r_rad - scenario[i].phi_r_rad),
                                pe.nu_hz - scenario[i].nu_hz};
                            for (int q = 0; q < 4; ++q)
                                sq_err(tr, q) += e[q] * e[q];
                        }
                    }
                });

                unsigned n_fail = std::accumulate(fails.begin(), fails.end(), 0u);
                for (int q = 0; q < 4; ++q)
                {
                    double acc = 0.0;
                    arma::uword n_ok = 0;
                    for (arma::uword tr = 0; tr < n_trials; ++tr)
                        if (std::isfinite(sq_err(tr, q)))
                        {
                            acc += sq_err(tr, q);
                            ++n_ok;
                        }
                    const double denom = static_cast<double>(n_ok) * static_cast<double>(scenario.size());
                    double bound2 = 0.0;
                    for (std::size_t i = 0; i < scenario.size(); ++i)
                        bound2 += std::pow(bounds(6 * i + q), 2);
                    rmse_cell cell;
                    cell.schedule_label = sched.label;
                    cell.snr_db = snr_db;
                    cell.parameter = names[q];
                    cell.rmse = (n_ok > 0 ? std::sqrt(acc / denom) : arma::datum::nan) * to_unit[q];
                    cell.sqrt_crlb = std::sqrt(bound2 / static_cast<double>(scenario.size())) * to_unit[q];
                    cell.n_fail = n_fail;
                    table.push_back(cell);
                }
            }
        }
        return table;
    }

} // namespace swseq

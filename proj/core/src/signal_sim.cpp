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

#include "swseq/signal_sim.hpp"

#include <mutex>

#include "swseq/rng.hpp"

namespace swseq
{

    void sounder_config::validate() const
    {
        tm.validate();
        if (!(delta_f_hz > 0.0))
            throw config_error("sounder_config: delta_f must be positive");
    }

    sounder_config default_sounder_config()
    {
        sounder_config cfg;
        cfg.tm = default_timing();
        cfg.delta_f_hz = 390.625e3;
        return cfg;
    }

    bool doppler_in_design_range(const sounder_config &cfg, const path &p)
    {
        return std::abs(p.nu_hz) < cfg.tm.nu_up_hz();
    }

    basis_factors basis_column_factors(const array_model &tx, const array_model &rx,
                                       const sounder_config &cfg, const arma::mat &eta,
                                       const path &p)
    {
        const timing &tm = cfg.tm;
        if (tx.num_elements() != tm.n_tx || rx.num_elements() != tm.n_rx)
            throw config_error("basis_column: array sizes do not match M_T / M_R");
        if (eta.n_rows != tm.n_tx || eta.n_cols != tm.n_snap)
            throw config_error("basis_column: eta dimensions do not match timing");

        basis_factors f;
        const arma::cx_vec b_tx = tx.response(p.phi_t_rad);
        f.tx.set_size(tm.n_tx * tm.n_snap);
        for (arma::uword t = 0; t < tm.n_snap; ++t)
            for (arma::uword m = 0; m < tm.n_tx; ++m)
                f.tx(t * tm.n_tx + m) = b_tx(m) * std::polar(1.0, two_pi * p.nu_hz * eta(m, t));

        const arma::cx_vec b_rx = rx.response(p.phi_r_rad);
        f.rx.set_size(tm.n_rx);
        for (arma::uword r = 0; r < tm.n_rx; ++r)
            f.rx(r) = b_rx(r) * std::polar(1.0, two_pi * p.nu_hz * static_cast<double>(r) * tm.t0_s);

        f.freq.set_size(tm.n_freq);
        for (arma::uword m = 0; m < tm.n_freq; ++m)
            f.freq(m) = std::polar(1.0, -two_pi * static_cast<double>(m) * cfg.delta_f_hz * p.tau_s);
        return f;
    }

    arma::cx_vec basis_column(const array_model &tx, const array_model &rx,
                              const sounder_config &cfg, const arma::mat &eta,
                              const path &p)
    {
        if (p.tau_s < 0.0 || p.tau_s >= cfg.unambiguous_delay_s())
            throw domain_error("basis_column: path delay outside the unambiguous range [0, 1/delta_f)");
        basis_factors f = basis_column_factors(tx, rx, cfg, eta, p);
        return arma::kron(f.tx, arma::kron(f.rx, f.freq));
    }

    arma::cx_mat basis_matrix(const array_model &tx, const array_model &rx,
                              const sounder_config &cfg, const switching_schedule &schedule,
                              const path_set &paths)
    {
        cfg.validate();
        const arma::mat eta = eta_from_schedule(schedule);
        const arma::uword n = cfg.tm.n_freq * cfg.tm.n_rx * cfg.tm.n_tx * cfg.tm.n_snap;
        arma::cx_mat b(n, paths.size());
        for (arma::uword p = 0; p < paths.size(); ++p)
            b.col(p) = basis_column(tx, rx, cfg, eta, paths[p]);
        return b;
    }

    observation synthesize_observation(const arma::cx_mat &basis, const arma::cx_vec &gains,
                                       double snr_db, std::uint64_t seed,
                                       const sounder_config &cfg,
                                       const switching_schedule &schedule)
    {
        if (basis.n_cols != gains.n_elem)
            throw config_error("synthesize_observation: gains length must match path count");
        const arma::uword n = cfg.tm.n_freq * cfg.tm.n_rx * cfg.tm.n_tx * cfg.tm.n_snap;
        if (basis.n_rows != n)
            throw config_error("synthesize_observation: basis rows do not match the configuration");

        arma::cx_vec s = basis * gains;
        const double energy = std::pow(arma::norm(s), 2);
        if (!(energy > 0.0))
            throw domain_error("synthesize_observation: zero signal with a finite SNR request");

        const double rho = std::pow(10.0, snr_db / 10.0);
        const double sigma2 = energy / (static_cast<double>(n) * rho);

        observation obs;
        obs.config = cfg;
        obs.schedule = schedule;
        obs.noise_var = sigma2;
        obs.y = std::move(s);
        rng gen(seed);
        const double scale = std::sqrt(sigma2);
        for (arma::uword i = 0; i < n; ++i)
            obs.y(i) += scale * gen.complex_normal();
        return obs;
    }

    spectrum_grid delay_doppler_spectrum(const observation &obs, const array_model &tx,
                                         const array_model &rx, const arma::vec &tau_grid,
                                         const arma::vec &nu_grid, arma::uword n_angle,
                                         unsigned workers)
    {
        if (tau_grid.empty() || nu_grid.empty())
            throw domain_error("delay_doppler_spectrum: grids must be non-empty");
        const timing &tm = obs.config.tm;
        const double tau_max = obs.config.unambiguous_delay_s();
        if (tau_grid.min() < 0.0 || tau_grid.max() >= tau_max)
            throw domain_error("delay_doppler_spectrum: delay grid outside the unambiguous range");

        const arma::uword n_tm = tm.n_tx * tm.n_snap;
        const arma::uword n_tau = tau_grid.n_elem;
        const arma::uword n_nu = nu_grid.n_elem;

        // delay matched filter per (snapshot, TX, RX) sample row: one zgemm.
        // acube(rr, i, t*M_T+m) = sum_f conj(exp(-j*2*pi*f*tau_i)) * y[t,m,rr,f]
        arma::cx_mat r(n_tm * tm.n_rx, tm.n_freq);
        for (arma::uword a = 0; a < n_tm * tm.n_rx; ++a)
            for (arma::uword m = 0; m < tm.n_freq; ++m)
                r(a, m) = obs.y(a * tm.n_freq + m);
        arma::cx_mat fgrid(tm.n_freq, n_tau);
        for (arma::uword i = 0; i < n_tau; ++i)
            for (arma::uword m = 0; m < tm.n_freq; ++m)
                fgrid(m, i) = std::polar(1.0, -two_pi * static_cast<double>(m) * obs.config.delta_f_hz * tau_grid(i));
        const arma::cx_mat a = r * arma::conj(fgrid); // (n_tm*M_R) x n_tau
        arma::cx_cube acube(tm.n_rx, n_tau, n_tm);
        for (arma::uword tmix = 0; tmix < n_tm; ++tmix)
            for (arma::uword i = 0; i < n_tau; ++i)
                for (arma::uword rr = 0; rr < tm.n_rx; ++rr)
                    acube(rr, i, tmix) = a(tmix * tm.n_rx + rr, i);

        const arma::vec angles = azimuth_grid(n_angle);
        const arma::cx_mat bt = tx.response_grid(angles); // M_T x n_angle
        const arma::cx_mat br = rx.response_grid(angles); // M_R x n_angle
        const arma::vec bt_inv = 1.0 / (arma::sum(arma::square(arma::abs(bt)), 0).t() * static_cast<double>(tm.n_snap));
        const arma::vec br_inv = 1.0 / (arma::sum(arma::square(arma::abs(br)), 0).t() * static_cast<double>(tm.n_freq));

        const arma::mat eta = eta_from_schedule(obs.schedule);
        const double y_norm2 = std::pow(arma::norm(obs.y), 2);

        spectrum_grid out;
        out.tau_s = tau_grid;
        out.nu_hz = nu_grid;
        out.power.zeros(n_tau, n_nu);

        parallel_for(n_nu, workers, [&](std::size_t k0, std::size_t k1) {
            arma::cx_mat tw(tm.n_rx * n_tau, tm.n_tx);
            arma::cx_mat cr(tm.n_rx, n_angle);
            arma::vec best(n_tau);
            for (std::size_t k = k0; k < k1; ++k)
            {
                const double nu = nu_grid(k);
                // collapse snapshots under the conjugated TX Doppler phase
                tw.zeros();
                for (arma::uword t = 0; t < tm.n_snap; ++t)
                    for (arma::uword m = 0; m < tm.n_tx; ++m)
                    {
                        const cxd ph = std::polar(1.0, -two_pi * nu * eta(m, t));
                        tw.col(m) += ph * arma::vectorise(acube.slice(t * tm.n_tx + m));
                    }
                const arma::cx_mat ytx = tw * arma::conj(bt); // (M_R*n_tau) x n_angle

                for (arma::uword rr = 0; rr < tm.n_rx; ++rr)
                {
                    const cxd ph = std::polar(1.0, -two_pi * nu * static_cast<double>(rr) * tm.t0_s);
                    cr.row(rr) = ph * arma::conj(br.row(rr));
                }

                best.zeros();
                for (arma::uword at = 0; at < n_angle; ++at)
                {
                    const arma::cx_mat ym(const_cast<cxd *>(ytx.colptr(at)), tm.n_rx, n_tau, false, true);
                    const arma::cx_mat z = cr.st() * ym; // n_angle x n_tau
                    for (arma::uword ar = 0; ar < n_angle; ++ar)
                    {
                        const double w = bt_inv(at) * br_inv(ar);
                        for (arma::uword i = 0; i < n_tau; ++i)
                        {
                            const double v = std::norm(z(ar, i)) * w;
                            if (v > best(i))
                                best(i) = v;
                        }
                    }
                }
                out.power.col(k) = best / y_norm2;
            }
        });
        return out;
    }

} // namespace swseq

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

#ifndef SWSEQ_SIGNAL_SIM_HPP
#define SWSEQ_SIGNAL_SIM_HPP

#include <armadillo>

#include "swseq/array_model.hpp"
#include "swseq/switching.hpp"

namespace swseq
{
    // Sounder configuration: timing block plus the frequency grid. The
    // frequency axis is baseband-referenced, f_m = m * delta_f, m = 0..M_f-1.
    struct sounder_config
    {
        timing tm;
        double delta_f_hz = 390.625e3;

        void validate() const;
        double bandwidth_hz() const { return static_cast<double>(tm.n_freq) * delta_f_hz; }
        double unambiguous_delay_s() const { return 1.0 / delta_f_hz; }
    };

    sounder_config default_sounder_config();

    // One specular path: delay, azimuth DoD, azimuth DoA, Doppler, complex gain
    struct path
    {
        double tau_s = 0.0;
        double phi_t_rad = 0.0;
        double phi_r_rad = 0.0;
        double nu_hz = 0.0;
        cxd gain = cxd(1.0, 0.0);
    };

    using path_set = std::vector<path>;

    // Soft design check: |nu| below the scrambled-sequence target M_T/(2*T0)
    bool doppler_in_design_range(const sounder_config &cfg, const path &p);

    // Per-domain basis factors of one column of B(mu):
    //   tx: length T*M_T, snapshot-major, [b_TV(phi_T)]_m * exp(j*2*pi*nu*eta(m,t))
    //   rx: length M_R, [b_RV(phi_R)]_r * exp(j*2*pi*nu*r*t0), r = 0..M_R-1
    //   freq: length M_f, exp(-j*2*pi*m*delta_f*tau)
    struct basis_factors
    {
        arma::cx_vec tx;
        arma::cx_vec rx;
        arma::cx_vec freq;
    };

    basis_factors basis_column_factors(const array_model &tx, const array_model &rx,
                                       const sounder_config &cfg, const arma::mat &eta,
                                       const path &p);

    // Khatri-Rao composed column, length M_f*M_R*M_T*T, frequency index fastest,
    // then RX, then TX antenna, then snapshot. Throws domain_error when the path
    // delay lies outside [0, 1/delta_f).
    arma::cx_vec basis_column(const array_model &tx, const array_model &rx,
                              const sounder_config &cfg, const arma::mat &eta,
                              const path &p);

    // Full basis matrix B(mu), one column per path
    arma::cx_mat basis_matrix(const array_model &tx, const array_model &rx,
                              const sounder_config &cfg, const switching_schedule &schedule,
                              const path_set &paths);

    struct observation
    {
        arma::cx_vec y;
        sounder_config config;
        switching_schedule schedule;
        double noise_var = 0.0;
    };

    // y = B*gains + n with circular complex white Gaussian noise of per-sample
    // variance ||B*gains||^2 / (N * 10^(snr_db/10)).
    observation synthesize_observation(const arma::cx_mat &basis, const arma::cx_vec &gains,
                                       double snr_db, std::uint64_t seed,
                                       const sounder_config &cfg,
                                       const switching_schedule &schedule);

    struct spectrum_grid
    {
        arma::vec tau_s;
        arma::vec nu_hz;
        arma::mat power; // n_tau x n_nu, normalized so the peak is <= 1
    };

    // Normalized delay-Doppler spectrum
    //   P(tau, nu) = max over an n_angle x n_angle azimuth grid of
    //                |b(tau, phi_T, phi_R, nu)^H y|^2 / (||b||^2 ||y||^2).
    // Angles are nuisance parameters here; maximizing over a grid fine enough to
    // resolve the array beamwidth keeps the peak-to-sidelobe contrast that a
    // noncoherent sum would average away.
    spectrum_grid delay_doppler_spectrum(const observation &obs, const array_model &tx,
                                         const array_model &rx, const arma::vec &tau_grid,
                                         const arma::vec &nu_grid, arma::uword n_angle = 72,
                                         unsigned workers = 1);

} // namespace swseq

#endif

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

#ifndef SWSEQ_ESTIMATION_HPP
#define SWSEQ_ESTIMATION_HPP

#include <string>
#include <vector>

#include "swseq/signal_sim.hpp"

namespace swseq
{
    // Fisher information over the real parameters, ordered per path as
    // (tau, phi_T, phi_R, nu, Re gamma, Im gamma); J = (2/sigma^2) Re{D^H D}.
    struct fisher_information
    {
        arma::mat info; // 6P x 6P, symmetric PSD
        double sigma2 = 0.0;
    };

    // Basis column plus its analytic partial derivatives for one path,
    // d/d(tau, phi_T, phi_R, nu); column length M_f*M_R*M_T*T.
    struct basis_derivatives
    {
        arma::cx_vec b;
        arma::cx_mat d; // 4 columns
    };

    basis_derivatives basis_column_derivatives(const array_model &tx, const array_model &rx,
                                               const sounder_config &cfg, const arma::mat &eta,
                                               const path &p);

    fisher_information fim(const array_model &tx, const array_model &rx,
                           const sounder_config &cfg, const switching_schedule &schedule,
                           const path_set &paths, double sigma2);

    // Elementwise sqrt of diag(J^-1); entries of a numerically singular
    // information matrix come back as +inf rather than throwing.
    arma::vec crlb(const fisher_information &f);

    // Initialization grids and refinement controls for the ML estimator.
    // Zeros select defaults: delay step 1/(2*bandwidth), Doppler step
    // 1/(4*T*T0), delay range [0, 1/delta_f), Doppler tolerance 1e-4/(T*T0).
    struct search_config
    {
        double tau_min_s = 0.0;
        double tau_max_s = 0.0;
        double nu_min_hz = 0.0;
        double nu_max_hz = 0.0;
        double delay_step_s = 0.0;
        double doppler_step_hz = 0.0;
        double angle_step_rad = 2.0 * pi / 180.0;
        unsigned max_iterations = 50;
        double tol_tau_s = 1e-13; // 1e-4 ns
        double tol_angle_rad = 1e-4;
        double tol_nu_hz = 0.0;

        search_config resolved(const sounder_config &cfg) const;
    };

    // Doppler window tied to the schedule type: +-M_T/(2*T0) for scrambled
    // sequences, +-1/(2*T0) when the TX sweep order repeats every snapshot.
    search_config default_search(const sounder_config &cfg, bool scrambled);

    struct path_estimate
    {
        path p;                  // gain holds the estimated complex amplitude
        unsigned iterations = 0; // Gauss-Newton iterations spent
        double residual_norm = 0.0;
        bool converged = false;
    };

    // Successive path extraction: coarse matched-filter initialization on the
    // residual, damped Gauss-Newton refinement with gains solved by linear
    // least squares, residual update; one joint refinement over all paths at
    // the end.
    std::vector<path_estimate> estimate(const observation &obs, const array_model &tx,
                                        const array_model &rx, arma::uword n_paths,
                                        const search_config &search);

    struct rmse_cell
    {
        std::string schedule_label;
        double snr_db = 0.0;
        std::string parameter; // tau_ns | phi_t_deg | phi_r_deg | nu_hz
        double rmse = 0.0;
        double sqrt_crlb = 0.0;
        unsigned n_fail = 0; // trials with a non-converged estimate
    };

    // Monte Carlo RMSE against sqrt-CRLB. Doppler errors are taken without
    // unwrapping (aliases count as errors); angular errors wrap to (-pi, pi].
    // Trials run independently on forked seeds; aggregation is order-free.
    std::vector<rmse_cell> montecarlo_rmse(const array_model &tx, const array_model &rx,
                                           const sounder_config &cfg, const path_set &scenario,
                                           const std::vector<switching_schedule> &schedules,
                                           const std::vector<double> &snr_db_list,
                                           arma::uword n_trials, std::uint64_t seed,
                                           unsigned workers = 1);

} // namespace swseq

#endif

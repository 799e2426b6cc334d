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

#ifndef SWSEQ_IO_HPP
#define SWSEQ_IO_HPP

#include <string>
#include <vector>

#include "swseq/ambiguity.hpp"
#include "swseq/annealer.hpp"
#include "swseq/estimation.hpp"
#include "swseq/signal_sim.hpp"
#include "swseq/switching.hpp"

namespace swseq
{
    // Schedule CSV: one row per TX antenna, one column per snapshot
    void write_schedule_csv(const std::string &file, const switching_schedule &s);
    switching_schedule read_schedule_csv(const std::string &file, const timing &tm,
                                         const std::string &label = "");

    // EADF CSV: header "elements,K", then per element 2*(2K+1) columns of
    // real,imag interleaved coefficients, modes ordered k = -K..K
    void write_eadf_csv(const std::string &file, const array_model &model);
    array_model read_eadf_csv(const std::string &file);

    // Ambiguity grid, long CSV: phi_deg, phi2_deg, dnu_hz, magnitude
    void write_grid_csv(const std::string &file, const ambiguity_grid &grid);

    // Compact binary dump: 8 little-endian doubles
    // {magic, N_phi, N_phi, N_nu, nu_up, 0, 0, 0}, then |X_T| row-major
    // (phi slowest, dnu fastest)
    void write_grid_binary(const std::string &file, const ambiguity_grid &grid);
    ambiguity_grid read_grid_binary(const std::string &file);

    // Observation dump: 8 little-endian doubles
    // {magic, M_f, M_R, M_T, T, sigma2, 0, 0}, then interleaved re/im doubles
    // in the documented sample ordering
    void write_observation(const std::string &file, const observation &obs);
    struct observation_dump
    {
        arma::uword m_f = 0, m_r = 0, m_t = 0, n_snap = 0;
        double noise_var = 0.0;
        arma::cx_vec y;
    };
    observation_dump read_observation(const std::string &file);

    // Spectrum CSV: tau_ns, nu_hz, power_db
    void write_spectrum_csv(const std::string &file, const spectrum_grid &spec);

    // Annealer trace CSV: iteration, temperature, cost, accepted, best
    void write_trace_csv(const std::string &file, const std::vector<anneal_record> &trace);
    std::vector<anneal_record> read_trace_csv(const std::string &file);

    // RMSE table CSV: schedule_label, snr_db, parameter, rmse, sqrt_crlb, n_fail
    void write_rmse_csv(const std::string &file, const std::vector<rmse_cell> &table);
    std::vector<rmse_cell> read_rmse_csv(const std::string &file);

    // Estimate report JSON (delays in ns, angles in degrees)
    void write_estimate_report_json(const std::string &file,
                                    const std::vector<path_estimate> &estimates);

} // namespace swseq

#endif

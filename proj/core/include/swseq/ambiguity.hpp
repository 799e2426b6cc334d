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

#ifndef SWSEQ_AMBIGUITY_HPP
#define SWSEQ_AMBIGUITY_HPP

#include <armadillo>

#include "swseq/array_model.hpp"
#include "swseq/signal_sim.hpp"
#include "swseq/switching.hpp"

namespace swseq
{
    // Uniform azimuth grid over (-pi, pi], point j at -pi + (j+1)*2*pi/n
    arma::vec azimuth_grid(arma::uword n_phi);

    // Integration / evaluation grid for the spatio-temporal ambiguity function.
    // p is the cost exponent of f_p; nu_up_hz = 0 means "derive M_T/(2*T0)
    // from the timing at the point of use".
    struct cost_params
    {
        int p = 6;
        arma::uword n_phi = 72;
        arma::uword n_nu = 128;
        double nu_up_hz = 0.0;

        void validate() const; // p >= 2 even, grids >= 8 points per axis
    };

    // Sampled |X_T| over (phi, phi', dnu) in [(-pi,pi], (-pi,pi], [0, nu_up]]
    struct ambiguity_grid
    {
        arma::vec phi_rad;  // N_phi
        arma::vec dnu_hz;   // N_nu
        arma::cube values;  // N_phi x N_phi x N_nu, all in [0, 1]
        double nu_up_hz = 0.0;
    };

    // Spatio-temporal ambiguity function
    //   X_T(phi, phi', dnu) = [sum_m b_m(phi)^* b_m(phi') W_m(dnu)]
    //                         / (T * ||b(phi)|| * ||b(phi')||),
    //   W_m(dnu) = sum_t exp(j*2*pi*dnu*eta(m,t)).
    // |X_T| <= 1 and X_T(phi, phi, 0) = 1. Depends on the two Doppler
    // arguments only through their difference.
    cxd x_t_value(const array_model &tx, const arma::mat &eta,
                  double phi, double phi2, double dnu_hz);

    // Precomputes the per-array grid quantities shared by every schedule:
    // steering products C_m(phi, phi') and the dnu-independent denominator.
    class ambiguity_evaluator
    {
    public:
        ambiguity_evaluator(const array_model &tx, const cost_params &params, double nu_up_hz);

        const arma::vec &phi_grid() const { return phi_; }
        const arma::vec &dnu_grid() const { return dnu_; }
        double nu_up_hz() const { return nu_up_; }
        arma::uword n_tx() const { return m_; }

        // Full |X_T| grid for the given firing-time matrix
        ambiguity_grid grid(const arma::mat &eta, unsigned workers = 1) const;

        // f_p(eta) without materializing the grid
        double cost(const arma::mat &eta, int p) const;

    private:
        arma::cx_mat w_matrix(const arma::mat &eta) const;   // M_T x N_nu
        double reduce(const arma::cx_mat &numerator, int p) const;

        arma::uword m_ = 0, n_phi_ = 0, n_nu_ = 0;
        double nu_up_ = 0.0;
        arma::vec phi_, dnu_, wnu_;
        double wphi_ = 0.0;
        arma::cx_mat cmat_;    // (N_phi^2) x M_T, column m = flattened C_m
        arma::vec inv_den_;    // N_phi^2, 1/(T_snapshots * ||b_i|| * ||b_j||); T filled on use
        arma::vec inv_den2_;

        friend class anneal_cost_engine;
    };

    // f_p: trapezoidal quadrature of |X_T|^p over D (periodic in both azimuths,
    // trapezoid over the Doppler axis)
    double cost_fp(const ambiguity_grid &grid, int p);

    // Main-lobe exclusion half-widths around the ridge {phi = phi', dnu = 0}
    struct mainlobe_exclusion
    {
        double dphi_rad = 0.0;
        double dnu_hz = 0.0;
    };

    // One Rayleigh resolution cell per axis: 10 degrees in azimuth and the
    // Doppler width 1/(T*T0) of the full observation window.
    mainlobe_exclusion default_exclusion(const timing &tm);

    // Normalized sidelobe level in dB: the largest |X_T| over grid points lying
    // outside the main-lobe region in BOTH axes (wrapped |phi - phi'| larger
    // than the azimuth half-width AND dnu larger than the Doppler half-width);
    // the main-lobe peak is 1 by construction. Floored at -300 dB.
    double nsl_db(const ambiguity_grid &grid, const mainlobe_exclusion &excl);

    // Generalized ambiguity function of two full structural parameter sets:
    // the normalized inner product of the corresponding basis columns.
    // |x_tot_value| <= |x_t_value| at the matching arguments.
    cxd x_tot_value(const array_model &tx, const array_model &rx,
                    const sounder_config &cfg, const arma::mat &eta,
                    const path &mu1, const path &mu2);

    // Incremental f_p engine for the annealer: a same-column swap changes two
    // rows of W, so the numerator grid is updated with two rank-1 corrections
    // instead of a full M_T-term recomputation.
    class anneal_cost_engine
    {
    public:
        anneal_cost_engine(const array_model &tx, const cost_params &params, double nu_up_hz);

        void reset(const switching_schedule &schedule); // full recomputation
        double current_cost() const { return cost_cur_; }
        const switching_schedule &schedule() const { return sched_; }
        const ambiguity_evaluator &evaluator() const { return ev_; }
        int exponent() const { return p_; }

        // cost of the schedule obtained by applying mv; stages the update
        double try_swap(const swap_move &mv);

        // adopt the last tried swap
        void commit();

    private:
        ambiguity_evaluator ev_;
        int p_;
        switching_schedule sched_;
        arma::mat eta_;
        arma::cx_mat w_;                  // M_T x N_nu
        arma::cx_mat num_cur_, num_cand_; // N_phi^2 x N_nu
        arma::cx_mat w_rows_cand_;        // 2 x N_nu staged W rows
        swap_move staged_{};
        bool has_staged_ = false;
        double cost_cur_ = 0.0, cost_cand_ = 0.0;
    };

} // namespace swseq

#endif

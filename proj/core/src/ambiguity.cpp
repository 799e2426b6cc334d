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

#include "swseq/ambiguity.hpp"

namespace swseq
{

    arma::vec azimuth_grid(arma::uword n_phi)
    {
        return eadf_sample_grid(n_phi);
    }

    void cost_params::validate() const
    {
        if (p < 2 || p % 2 != 0)
            throw config_error("cost_params: exponent p must be an even integer >= 2");
        if (n_phi < 8 || n_nu < 8)
            throw config_error("cost_params: grids need at least 8 points per axis");
        if (nu_up_hz < 0.0)
            throw config_error("cost_params: nu_up must be nonnegative");
    }

    cxd x_t_value(const array_model &tx, const arma::mat &eta,
                  double phi, double phi2, double dnu_hz)
    {
        const arma::uword m = tx.num_elements();
        if (eta.n_rows != m)
            throw config_error("x_t_value: eta row count does not match the TX array");
        const arma::uword n_snap = eta.n_cols;

        const arma::cx_vec b1 = tx.response(phi);
        const arma::cx_vec b2 = tx.response(phi2);
        cxd num(0.0, 0.0);
        for (arma::uword i = 0; i < m; ++i)
        {
            cxd w(0.0, 0.0);
            for (arma::uword t = 0; t < n_snap; ++t)
                w += std::polar(1.0, two_pi * dnu_hz * eta(i, t));
            num += std::conj(b1(i)) * b2(i) * w;
        }
        const double den = static_cast<double>(n_snap) * arma::norm(b1) * arma::norm(b2);
        return num / den;
    }

    ambiguity_evaluator::ambiguity_evaluator(const array_model &tx, const cost_params &params,
                                             double nu_up_hz)
    {
        params.validate();
        nu_up_ = params.nu_up_hz > 0.0 ? params.nu_up_hz : nu_up_hz;
        if (!(nu_up_ > 0.0))
            throw config_error("ambiguity_evaluator: nu_up must be positive");

        m_ = tx.num_elements();
        n_phi_ = params.n_phi;
        n_nu_ = params.n_nu;
        phi_ = azimuth_grid(n_phi_);
        dnu_ = arma::linspace(0.0, nu_up_, n_nu_);

        wphi_ = two_pi / static_cast<double>(n_phi_);
        wnu_.set_size(n_nu_);
        const double h = dnu_(1) - dnu_(0);
        wnu_.fill(h);
        wnu_(0) *= 0.5;
        wnu_(n_nu_ - 1) *= 0.5;

        const arma::cx_mat b = tx.response_grid(phi_); // M x N_phi
        arma::vec nrm(n_phi_);
        for (arma::uword j = 0; j < n_phi_; ++j)
            nrm(j) = arma::norm(b.col(j));
        if (nrm.min() <= 0.0)
            throw config_error("ambiguity_evaluator: array response vanishes on the grid");

        cmat_.set_size(n_phi_ * n_phi_, m_);
        inv_den_.set_size(n_phi_ * n_phi_);
        for (arma::uword j = 0; j < n_phi_; ++j)
            for (arma::uword i = 0; i < n_phi_; ++i)
            {
                const arma::uword pr = i + j * n_phi_;
                inv_den_(pr) = 1.0 / (nrm(i) * nrm(j));
                for (arma::uword k = 0; k < m_; ++k)
                    cmat_(pr, k) = std::conj(b(k, i)) * b(k, j);
            }
        inv_den2_ = arma::square(inv_den_);
    }

    arma::cx_mat ambiguity_evaluator::w_matrix(const arma::mat &eta) const
    {
        if (eta.n_rows != m_)
            throw config_error("ambiguity_evaluator: eta row count does not match the TX array");
        arma::cx_mat w(m_, n_nu_, arma::fill::zeros);
        for (arma::uword k = 0; k < n_nu_; ++k)
            for (arma::uword i = 0; i < m_; ++i)
            {
                cxd acc(0.0, 0.0);
                for (arma::uword t = 0; t < eta.n_cols; ++t)
                    acc += std::polar(1.0, two_pi * dnu_(k) * eta(i, t));
                w(i, k) = acc;
            }
        return w;
    }

    ambiguity_grid ambiguity_evaluator::grid(const arma::mat &eta, unsigned workers) const
    {
        const double t_snap = static_cast<double>(eta.n_cols);
        const arma::cx_mat w = w_matrix(eta);

        ambiguity_grid g;
        g.phi_rad = phi_;
        g.dnu_hz = dnu_;
        g.nu_up_hz = nu_up_;
        g.values.set_size(n_phi_, n_phi_, n_nu_);

        parallel_for(n_nu_, workers, [&](std::size_t k0, std::size_t k1) {
            arma::cx_vec num(n_phi_ * n_phi_);
            for (std::size_t k = k0; k < k1; ++k)
            {
                num = cmat_ * w.col(k);
                double *dst = g.values.slice_memptr(k);
                for (arma::uword pr = 0; pr < n_phi_ * n_phi_; ++pr)
                    dst[pr] = std::abs(num(pr)) * inv_den_(pr) / t_snap;
            }
        });
        return g;
    }

    double ambiguity_evaluator::reduce(const arma::cx_mat &numerator, int p) const
    {
        // numerator excludes the 1/(T*||b||*||b'||) normalization; fold the
        // denominator in through inv_den2_ and divide by T^p at the end
        const int half = p / 2;
        double total = 0.0;
        for (arma::uword k = 0; k < n_nu_; ++k)
        {
            const cxd *col = numerator.colptr(k);
            double acc = 0.0;
            for (arma::uword pr = 0; pr < inv_den2_.n_elem; ++pr)
            {
                const double q = std::norm(col[pr]) * inv_den2_(pr);
                double v = q;
                for (int e = 1; e < half; ++e)
                    v *= q;
                acc += v;
            }
            total += acc * wnu_(k);
        }
        return total * wphi_ * wphi_;
    }

    double ambiguity_evaluator::cost(const arma::mat &eta, int p) const
    {
        if (p < 2 || p % 2 != 0)
            throw config_error("cost: exponent p must be an even integer >= 2");
        const arma::cx_mat num = cmat_ * w_matrix(eta);
        const double t_snap = static_cast<double>(eta.n_cols);
        return reduce(num, p) / std::pow(t_snap, p);
    }

    double cost_fp(const ambiguity_grid &grid, int p)
    {
        if (p < 2 || p % 2 != 0)
            throw config_error("cost_fp: exponent p must be an even integer >= 2");
        const arma::uword n_phi = grid.phi_rad.n_elem;
        const arma::uword n_nu = grid.dnu_hz.n_elem;
        const double wphi = two_pi / static_cast<double>(n_phi);
        const double h = grid.dnu_hz(1) - grid.dnu_hz(0);
        double total = 0.0;
        for (arma::uword k = 0; k < n_nu; ++k)
        {
            const double wnu = (k == 0 || k == n_nu - 1) ? 0.5 * h : h;
            const double *v = grid.values.slice_memptr(k);
            double acc = 0.0;
            for (arma::uword pr = 0; pr < n_phi * n_phi; ++pr)
                acc += std::pow(v[pr], p);
            total += acc * wnu;
        }
        return total * wphi * wphi;
    }

    mainlobe_exclusion default_exclusion(const timing &tm)
    {
        mainlobe_exclusion e;
        e.dphi_rad = 10.0 * pi / 180.0;
        e.dnu_hz = 1.0 / (static_cast<double>(tm.n_snap) * tm.snapshot_s);
        return e;
    }

    double nsl_db(const ambiguity_grid &grid, const mainlobe_exclusion &excl)
    {
        const arma::uword n_phi = grid.phi_rad.n_elem;
        const arma::uword n_nu = grid.dnu_hz.n_elem;

        std::vector<bool> phi_out(n_phi * n_phi);
        bool any_phi = false;
        for (arma::uword j = 0; j < n_phi; ++j)
            for (arma::uword i = 0; i < n_phi; ++i)
            {
                const bool out = angle_distance(grid.phi_rad(i), grid.phi_rad(j)) > excl.dphi_rad;
                phi_out[i + j * n_phi] = out;
                any_phi = any_phi || out;
            }
        arma::uword k_first = n_nu;
        for (arma::uword k = 0; k < n_nu; ++k)
            if (grid.dnu_hz(k) > excl.dnu_hz)
            {
                k_first = k;
                break;
            }
        if (!any_phi || k_first == n_nu)
            throw domain_error("nsl_db: main-lobe exclusion covers the entire grid");

        double peak = 0.0;
        for (arma::uword k = k_first; k < n_nu; ++k)
        {
            const double *v = grid.values.slice_memptr(k);
            for (arma::uword pr = 0; pr < n_phi * n_phi; ++pr)
                if (phi_out[pr] && v[pr] > peak)
                    peak = v[pr];
        }
        const double floor_db = -300.0;
        if (peak <= 0.0)
            return floor_db;
        return std::max(floor_db, 20.0 * std::log10(peak));
    }

    cxd x_tot_value(const array_model &tx, const array_model &rx,
                    const sounder_config &cfg, const arma::mat &eta,
                    const path &mu1, const path &mu2)
    {
        const arma::cx_vec b1 = basis_column(tx, rx, cfg, eta, mu1);
        const arma::cx_vec b2 = basis_column(tx, rx, cfg, eta, mu2);
        return arma::cdot(b1, b2) / (arma::norm(b1) * arma::norm(b2));
    }

    // --------------------------------------------------------------------

    anneal_cost_engine::anneal_cost_engine(const array_model &tx, const cost_params &params,
                                           double nu_up_hz)
        : ev_(tx, params, nu_up_hz), p_(params.p)
    {
    }

    void anneal_cost_engine::reset(const switching_schedule &schedule)
    {
        schedule.validate();
        if (schedule.tm.n_tx != ev_.m_)
            throw config_error("anneal_cost_engine: schedule M_T does not match the TX array");
        sched_ = schedule;
        eta_ = eta_from_schedule(schedule);
        w_ = ev_.w_matrix(eta_);
        num_cur_ = ev_.cmat_ * w_;
        num_cand_.set_size(arma::size(num_cur_));
        w_rows_cand_.set_size(2, ev_.n_nu_);
        const double t_snap = static_cast<double>(sched_.tm.n_snap);
        cost_cur_ = ev_.reduce(num_cur_, p_) / std::pow(t_snap, p_);
        has_staged_ = false;
    }

    double anneal_cost_engine::try_swap(const swap_move &mv)
    {
        const arma::uword a = mv.row_a, b = mv.row_b, t = mv.column;
        if (a >= eta_.n_rows || b >= eta_.n_rows || t >= eta_.n_cols || a == b)
            throw feasibility_error("anneal_cost_engine: invalid swap move");

        // swapping slots within column t exchanges the two firing times
        const double eta_a_new = eta_(b, t);
        const double eta_b_new = eta_(a, t);

        for (arma::uword k = 0; k < ev_.n_nu_; ++k)
        {
            const double f = two_pi * ev_.dnu_(k);
            const cxd da = std::polar(1.0, f * eta_a_new) - std::polar(1.0, f * eta_(a, t));
            const cxd db = std::polar(1.0, f * eta_b_new) - std::polar(1.0, f * eta_(b, t));
            w_rows_cand_(0, k) = w_(a, k) + da;
            w_rows_cand_(1, k) = w_(b, k) + db;
            num_cand_.col(k) = num_cur_.col(k) + ev_.cmat_.col(a) * da + ev_.cmat_.col(b) * db;
        }
        const double t_snap = static_cast<double>(sched_.tm.n_snap);
        cost_cand_ = ev_.reduce(num_cand_, p_) / std::pow(t_snap, p_);
        staged_ = mv;
        has_staged_ = true;
        return cost_cand_;
    }

    void anneal_cost_engine::commit()
    {
        if (!has_staged_)
            throw feasibility_error("anneal_cost_engine: no staged swap to commit");
        std::swap(sched_.slots(staged_.row_a, staged_.column),
                  sched_.slots(staged_.row_b, staged_.column));
        std::swap(eta_(staged_.row_a, staged_.column), eta_(staged_.row_b, staged_.column));
        w_.row(staged_.row_a) = w_rows_cand_.row(0);
        w_.row(staged_.row_b) = w_rows_cand_.row(1);
        num_cur_.swap(num_cand_);
        cost_cur_ = cost_cand_;
        has_staged_ = false;
    }

} // namespace swseq

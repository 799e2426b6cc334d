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

#include "swseq/array_model.hpp"

namespace swseq
{

    array_model array_model::ula(arma::uword n, double spacing_wl)
    {
        array_model m;
        m.kind_ = array_kind::synthetic_ula;
        m.n_ = n;
        m.pos_.zeros(n, 2);
        for (arma::uword i = 0; i < n; ++i)
            m.pos_(i, 1) = static_cast<double>(i) * spacing_wl;
        m.check();
        return m;
    }

    array_model array_model::uca(arma::uword n, double radius_wl)
    {
        array_model m;
        m.kind_ = array_kind::synthetic_uca;
        m.n_ = n;
        m.pos_.set_size(n, 2);
        for (arma::uword i = 0; i < n; ++i)
        {
            double th = two_pi * static_cast<double>(i) / static_cast<double>(n);
            m.pos_(i, 0) = radius_wl * std::cos(th);
            m.pos_(i, 1) = radius_wl * std::sin(th);
        }
        m.check();
        return m;
    }

    array_model array_model::from_eadf(arma::cx_mat coefficients)
    {
        array_model m;
        m.kind_ = array_kind::eadf;
        m.n_ = coefficients.n_rows;
        m.coeffs_ = std::move(coefficients);
        m.check();
        return m;
    }

    void array_model::check() const
    {
        if (n_ < 1)
            throw config_error("array_model: num_elements must be >= 1");
        if (kind_ == array_kind::eadf)
        {
            if (coeffs_.n_cols % 2 == 0 || coeffs_.n_cols == 0)
                throw config_error("array_model: EADF coefficient matrix must have an odd "
                                   "column count 2K+1, got " + std::to_string(coeffs_.n_cols));
        }
        if (!gain_.empty() && gain_.n_elem != n_)
            throw config_error("array_model: element gain length mismatch");
    }

    int array_model::mode_order() const
    {
        if (kind_ != array_kind::eadf)
            return -1;
        return static_cast<int>((coeffs_.n_cols - 1) / 2);
    }

    void array_model::set_element_gain(arma::vec gain)
    {
        if (gain.n_elem != n_)
            throw config_error("array_model: element gain length mismatch");
        gain_ = std::move(gain);
    }

    arma::cx_vec array_model::response(double phi) const
    {
        const double w = wrap_angle(phi);
        arma::cx_vec b(n_);
        if (kind_ == array_kind::eadf)
        {
            const int K = mode_order();
            arma::cx_vec d(2 * K + 1);
            for (int k = -K; k <= K; ++k)
                d(static_cast<arma::uword>(k + K)) = std::polar(1.0, k * w);
            b = coeffs_ * d;
        }
        else
        {
            const double c = std::cos(w), s = std::sin(w);
            for (arma::uword i = 0; i < n_; ++i)
                b(i) = std::polar(1.0, two_pi * (pos_(i, 0) * c + pos_(i, 1) * s));
        }
        if (!gain_.empty())
            b %= arma::conv_to<arma::cx_vec>::from(gain_);
        return b;
    }

    arma::cx_vec array_model::response_derivative(double phi) const
    {
        const double w = wrap_angle(phi);
        arma::cx_vec db(n_);
        if (kind_ == array_kind::eadf)
        {
            const int K = mode_order();
            arma::cx_vec d(2 * K + 1);
            for (int k = -K; k <= K; ++k)
                d(static_cast<arma::uword>(k + K)) = cxd(0.0, k) * std::polar(1.0, k * w);
            db = coeffs_ * d;
        }
        else
        {
            const double c = std::cos(w), s = std::sin(w);
            for (arma::uword i = 0; i < n_; ++i)
            {
                cxd b = std::polar(1.0, two_pi * (pos_(i, 0) * c + pos_(i, 1) * s));
                db(i) = b * cxd(0.0, two_pi * (-pos_(i, 0) * s + pos_(i, 1) * c));
            }
        }
        if (!gain_.empty())
            db %= arma::conv_to<arma::cx_vec>::from(gain_);
        return db;
    }

    arma::cx_mat array_model::response_grid(const arma::vec &phis) const
    {
        arma::cx_mat b(n_, phis.n_elem);
        for (arma::uword j = 0; j < phis.n_elem; ++j)
            b.col(j) = response(phis(j));
        return b;
    }

    const arma::cx_mat &array_model::eadf_coefficients() const
    {
        if (kind_ != array_kind::eadf)
            throw config_error("array_model: not an EADF model");
        return coeffs_;
    }

    const arma::mat &array_model::element_positions() const
    {
        if (kind_ == array_kind::eadf)
            throw config_error("array_model: EADF model has no element positions");
        return pos_;
    }

    arma::vec eadf_sample_grid(arma::uword n_phi)
    {
        arma::vec g(n_phi);
        for (arma::uword j = 0; j < n_phi; ++j)
            g(j) = -pi + static_cast<double>(j + 1) * two_pi / static_cast<double>(n_phi);
        return g;
    }

    eadf_fit eadf_from_samples(const arma::cx_mat &samples, int mode_order)
    {
        if (mode_order < 0)
            throw config_error("eadf_from_samples: mode order must be >= 0");
        const arma::uword n_phi = samples.n_cols;
        const arma::uword n_modes = 2 * static_cast<arma::uword>(mode_order) + 1;
        if (n_phi < n_modes)
            throw config_error("eadf_from_samples: underdetermined, need N_phi >= 2K+1 "
                               "(N_phi=" + std::to_string(n_phi) +
                               ", 2K+1=" + std::to_string(n_modes) + ")");

        const arma::vec grid = eadf_sample_grid(n_phi);

        // central DFT modes: coeff(m,k) = (1/N) * sum_j samples(m,j) * exp(-j*k*phi_j)
        arma::cx_mat e(n_phi, n_modes);
        for (int k = -mode_order; k <= mode_order; ++k)
            for (arma::uword j = 0; j < n_phi; ++j)
                e(j, static_cast<arma::uword>(k + mode_order)) = std::polar(1.0, -k * grid(j));
        arma::cx_mat coeffs = samples * e / static_cast<double>(n_phi);

        array_model model = array_model::from_eadf(coeffs);
        double max_err = 0.0;
        for (arma::uword j = 0; j < n_phi; ++j)
        {
            arma::cx_vec rec = model.response(grid(j));
            max_err = std::max(max_err, arma::abs(rec - samples.col(j)).max());
        }
        return {std::move(model), max_err};
    }

} // namespace swseq

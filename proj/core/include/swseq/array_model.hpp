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

#ifndef SWSEQ_ARRAY_MODEL_HPP
#define SWSEQ_ARRAY_MODEL_HPP

#include <armadillo>

#include "swseq/common.hpp"

namespace swseq
{
    enum class array_kind
    {
        synthetic_ula,
        synthetic_uca,
        eadf
    };

    // Azimuth-only complex array response b(phi), 2*pi-periodic by construction.
    //
    // Synthetic kinds evaluate a plane-wave phase over 2D element positions
    // given in wavelengths: [b(phi)]_m = g_m * exp(j*2*pi*(x_m*cos(phi) + y_m*sin(phi))).
    // A ULA lies on the y axis so that entry m is exp(j*pi*(m-1)*sin(phi)) at
    // half-wavelength spacing. The EADF kind evaluates coeff * d(phi) with
    // d_k(phi) = exp(j*k*phi), k = -K..K.
    class array_model
    {
    public:
        // n-element uniform linear array along the y axis, spacing in wavelengths
        static array_model ula(arma::uword n, double spacing_wl = 0.5);

        // n-element uniform circular array, radius in wavelengths, element 1 at phi = 0
        static array_model uca(arma::uword n, double radius_wl);

        // EADF kind from a coefficient matrix, num_elements x (2K+1), modes k = -K..K
        static array_model from_eadf(arma::cx_mat coefficients);

        array_kind kind() const { return kind_; }
        arma::uword num_elements() const { return n_; }

        // EADF mode order K; -1 for synthetic kinds
        int mode_order() const;

        // Optional per-element amplitude taper (empty = isotropic unit gain)
        void set_element_gain(arma::vec gain);
        const arma::vec &element_gain() const { return gain_; }

        // Steering vector b(phi); phi may be any real and is wrapped to (-pi, pi]
        arma::cx_vec response(double phi) const;

        // d/dphi of the steering vector (analytic; used for Fisher information)
        arma::cx_vec response_derivative(double phi) const;

        // Columns are response(phis[i]); convenience for grid evaluation
        arma::cx_mat response_grid(const arma::vec &phis) const;

        const arma::cx_mat &eadf_coefficients() const; // EADF kind only
        const arma::mat &element_positions() const;    // synthetic kinds only

    private:
        array_model() = default;
        void check() const;

        array_kind kind_ = array_kind::synthetic_ula;
        arma::uword n_ = 0;
        arma::mat pos_;        // n x 2, wavelengths (synthetic)
        arma::cx_mat coeffs_;  // n x (2K+1) (eadf)
        arma::vec gain_;       // n or empty
    };

    struct eadf_fit
    {
        array_model model;
        double max_abs_error; // max reconstruction error on the sample grid
    };

    // Fit the 2K+1 central Fourier modes of per-element patterns sampled on a
    // uniform azimuth grid over (-pi, pi] (column j at phi_j = -pi + (j+1)*2*pi/N).
    eadf_fit eadf_from_samples(const arma::cx_mat &samples, int mode_order);

    // The sample grid assumed by eadf_from_samples
    arma::vec eadf_sample_grid(arma::uword n_phi);

} // namespace swseq

#endif

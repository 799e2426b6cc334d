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

#ifndef SWSEQ_RNG_HPP
#define SWSEQ_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "swseq/common.hpp"

namespace swseq
{
    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Seeded random source. All draws are derived from mt19937_64 output words
    // directly (no std distributions), so sequences are identical across
    // platforms and standard library implementations.
    class rng
    {
    public:
        explicit rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

        std::uint64_t seed() const { return seed_; }

        std::uint64_t next_u64() { return engine_(); }

        // uniform on [0, 1)
        double uniform()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        // uniform integer on [0, n), bias-free by rejection
        std::uint64_t uniform_index(std::uint64_t n)
        {
            if (n == 0)
                throw domain_error("rng::uniform_index: n must be positive");
            const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
            std::uint64_t v;
            do
            {
                v = engine_();
            } while (v >= limit);
            return v % n;
        }

        // standard normal via Box-Muller
        double normal()
        {
            if (have_spare_)
            {
                have_spare_ = false;
                return spare_;
            }
            double u1 = 0.0;
            while (u1 == 0.0)
                u1 = uniform();
            double u2 = uniform();
            double r = std::sqrt(-2.0 * std::log(u1));
            spare_ = r * std::sin(two_pi * u2);
            have_spare_ = true;
            return r * std::cos(two_pi * u2);
        }

        // circular complex Gaussian with E|z|^2 = 1
        cxd complex_normal()
        {
            return cxd(normal(), normal()) * 0x1.6a09e667f3bcdp-1; // 1/sqrt(2)
        }

        // Independent child stream; deterministic function of (seed, stream).
        rng fork(std::uint64_t stream) const
        {
            return rng(splitmix64(seed_ ^ splitmix64(stream + 0x51a5f51a5ULL)));
        }

    private:
        std::uint64_t seed_;
        std::mt19937_64 engine_;
        bool have_spare_ = false;
        double spare_ = 0.0;
    };

} // namespace swseq

#endif

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

#ifndef SWSEQ_COMMON_HPP
#define SWSEQ_COMMON_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace swseq
{
    inline constexpr double pi = 3.141592653589793238462643383279502884;
    inline constexpr double two_pi = 2.0 * pi;

    using cxd = std::complex<double>;

    // Invalid model / configuration input (CLI exit code 2)
    class config_error : public std::runtime_error
    {
    public:
        explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Violated schedule / timing feasibility constraint (CLI exit code 3)
    class feasibility_error : public std::runtime_error
    {
    public:
        explicit feasibility_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Parameter outside its admissible range (CLI exit code 4)
    class domain_error : public std::runtime_error
    {
    public:
        explicit domain_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Wrap an angle to the principal interval (-pi, pi].
    // remainder() is exact for the given double-precision modulus, so equal
    // inputs modulo the double value of 2*pi map to identical outputs.
    inline double wrap_angle(double x)
    {
        double w = std::remainder(x, two_pi);
        if (w <= -pi)
            w += two_pi;
        return w;
    }

    // Wrapped absolute distance between two angles, in [0, pi]
    inline double angle_distance(double a, double b)
    {
        return std::abs(wrap_angle(a - b));
    }

    // Chunked parallel map over [0, n). fn(begin, end) is called on each worker's
    // slice; workers == 0 selects the hardware concurrency, workers == 1 runs inline.
    inline void parallel_for(std::size_t n, unsigned workers,
                             const std::function<void(std::size_t, std::size_t)> &fn)
    {
        if (workers == 0)
            workers = std::max(1u, std::thread::hardware_concurrency());
        if (workers <= 1 || n <= 1)
        {
            fn(0, n);
            return;
        }
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            std::size_t b = static_cast<std::size_t>(w) * chunk;
            std::size_t e = std::min(n, b + chunk);
            if (b >= e)
                break;
            pool.emplace_back(fn, b, e);
        }
        for (auto &t : pool)
            t.join();
    }

} // namespace swseq

#endif

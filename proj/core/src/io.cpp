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

#include "swseq/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace swseq
{
    namespace
    {
        constexpr double grid_magic = 1398034759.0; // 0x53575147
        constexpr double obs_magic = 1398034242.0;  // 0x53574F42

        std::ofstream open_out(const std::string &file, std::ios::openmode mode = std::ios::out)
        {
            std::ofstream f(file, mode);
            if (!f)
                throw config_error("cannot open for writing: " + file);
            return f;
        }

        std::ifstream open_in(const std::string &file, std::ios::openmode mode = std::ios::in)
        {
            std::ifstream f(file, mode);
            if (!f)
                throw config_error("cannot open for reading: " + file);
            return f;
        }

        // shortest round-trippable decimal form
        std::string fmt(double v)
        {
            std::ostringstream os;
            os << std::setprecision(17) << v;
            return os.str();
        }

        std::vector<std::string> split_csv_line(const std::string &line)
        {
            std::vector<std::string> out;
            std::stringstream ss(line);
            std::string tok;
            while (std::getline(ss, tok, ','))
                out.push_back(tok);
            return out;
        }
    } // namespace

    void write_schedule_csv(const std::string &file, const switching_schedule &s)
    {
        s.validate();
        auto f = open_out(file);
        for (arma::uword m = 0; m < s.slots.n_rows; ++m)
        {
            for (arma::uword t = 0; t < s.slots.n_cols; ++t)
                f << s.slots(m, t) << (t + 1 < s.slots.n_cols ? "," : "");
            f << "\n";
        }
    }

    switching_schedule read_schedule_csv(const std::string &file, const timing &tm,
                                         const std::string &label)
    {
        auto f = open_in(file);
        std::vector<std::vector<arma::uword>> rows;
        std::string line;
        while (std::getline(f, line))
        {
            if (line.empty())
                continue;
            std::vector<arma::uword> row;
            for (const auto &tok : split_csv_line(line))
            {
                try
                {
                    row.push_back(static_cast<arma::uword>(std::stoul(tok)));
                }
                catch (const std::exception &)
                {
                    throw config_error("schedule CSV parse error in " + file + ": '" + tok + "'");
                }
            }
            rows.push_back(std::move(row));
        }
        if (rows.empty())
            throw config_error("schedule CSV is empty: " + file);
        switching_schedule s;
        s.tm = tm;
        s.label = label.empty() ? "file" : label;
        s.slots.set_size(rows.size(), rows[0].size());
        for (arma::uword m = 0; m < rows.size(); ++m)
        {
            if (rows[m].size() != rows[0].size())
                throw config_error("schedule CSV has ragged rows: " + file);
            for (arma::uword t = 0; t < rows[m].size(); ++t)
                s.slots(m, t) = rows[m][t];
        }
        s.validate();
        return s;
    }

    void write_eadf_csv(const std::string &file, const array_model &model)
    {
        const arma::cx_mat &c = model.eadf_coefficients();
        auto f = open_out(file);
        f << model.num_elements() << "," << model.mode_order() << "\n";
        for (arma::uword m = 0; m < c.n_rows; ++m)
        {
            for (arma::uword k = 0; k < c.n_cols; ++k)
            {
                f << fmt(c(m, k).real()) << "," << fmt(c(m, k).imag());
                if (k + 1 < c.n_cols)
                    f << ",";
            }
            f << "\n";
        }
    }

    array_model read_eadf_csv(const std::string &file)
    {
        auto f = open_in(file);
        std::string line;
        if (!std::getline(f, line))
            throw config_error("EADF CSV is empty: " + file);
        auto head = split_csv_line(line);
        if (head.size() != 2)
            throw config_error("EADF CSV header must be 'elements,K': " + file);
        const arma::uword n = std::stoul(head[0]);
        const int order = std::stoi(head[1]);
        const arma::uword n_modes = 2 * static_cast<arma::uword>(order) + 1;
        arma::cx_mat c(n, n_modes);
        for (arma::uword m = 0; m < n; ++m)
        {
            if (!std::getline(f, line))
                throw config_error("EADF CSV is truncated: " + file);
            auto toks = split_csv_line(line);
            if (toks.size() != 2 * n_modes)
                throw config_error("EADF CSV row length mismatch: " + file);
            for (arma::uword k = 0; k < n_modes; ++k)
                c(m, k) = cxd(std::stod(toks[2 * k]), std::stod(toks[2 * k + 1]));
        }
        return array_model::from_eadf(std::move(c));
    }

    void write_grid_csv(const std::string &file, const ambiguity_grid &grid)
    {
        auto f = open_out(file);
        f << "phi_deg,phi2_deg,dnu_hz,magnitude\n";
        const double r2d = 180.0 / pi;
        for (arma::uword i = 0; i < grid.phi_rad.n_elem; ++i)
            for (arma::uword j = 0; j < grid.phi_rad.n_elem; ++j)
                for (arma::uword k = 0; k < grid.dnu_hz.n_elem; ++k)
                    f << fmt(grid.phi_rad(i) * r2d) << "," << fmt(grid.phi_rad(j) * r2d) << ","
                      << fmt(grid.dnu_hz(k)) << "," << fmt(grid.values(i, j, k)) << "\n";
    }

    void write_grid_binary(const std::string &file, const ambiguity_grid &grid)
    {
        auto f = open_out(file, std::ios::binary);
        const double header[8] = {grid_magic,
                                  static_cast<double>(grid.phi_rad.n_elem),
                                  static_cast<double>(grid.phi_rad.n_elem),
                                  static_cast<double>(grid.dnu_hz.n_elem),
                                  grid.nu_up_hz, 0.0, 0.0, 0.0};
        f.write(reinterpret_cast<const char *>(header), sizeof(header));
        for (arma::uword i = 0; i < grid.phi_rad.n_elem; ++i)
            for (arma::uword j = 0; j < grid.phi_rad.n_elem; ++j)
                for (arma::uword k = 0; k < grid.dnu_hz.n_elem; ++k)
                {
                    const double v = grid.values(i, j, k);
                    f.write(reinterpret_cast<const char *>(&v), sizeof(double));
                }
    }

    ambiguity_grid read_grid_binary(const std::string &file)
    {
        auto f = open_in(file, std::ios::binary);
        double header[8];
        f.read(reinterpret_cast<char *>(header), sizeof(header));
        if (!f || header[0] != grid_magic)
            throw config_error("not an ambiguity grid dump: " + file);
        ambiguity_grid g;
        const auto n_phi = static_cast<arma::uword>(header[1]);
        const auto n_nu = static_cast<arma::uword>(header[3]);
        g.nu_up_hz = header[4];
        g.phi_rad = azimuth_grid(n_phi);
        g.dnu_hz = arma::linspace(0.0, g.nu_up_hz, n_nu);
        g.values.set_size(n_phi, n_phi, n_nu);
        for (arma::uword i = 0; i < n_phi; ++i)
            for (arma::uword j = 0; j < n_phi; ++j)
                for (arma::uword k = 0; k < n_nu; ++k)
                {
                    double v;
                    f.read(reinterpret_cast<char *>(&v), sizeof(double));
                    g.values(i, j, k) = v;
                }
        if (!f)
            throw config_error("truncated ambiguity grid dump: " + file);
        return g;
    }

    void write_observation(const std::string &file, const observation &obs)
    {
        auto f = open_out(file, std::ios::binary);
        const timing &tm = obs.config.tm;
        const double header[8] = {obs_magic,
                                  static_cast<double>(tm.n_freq),
                                  static_cast<double>(tm.n_rx),
                                  static_cast<double>(tm.n_tx),
                                  static_cast<double>(tm.n_snap),
                                  obs.noise_var, 0.0, 0.0};
        f.write(reinterpret_cast<const char *>(header), sizeof(header));
        for (arma::uword i = 0; i < obs.y.n_elem; ++i)
        {
            const double re = obs.y(i).real(), im = obs.y(i).imag();
            f.write(reinterpret_cast<const char *>(&re), sizeof(double));
            f.write(reinterpret_cast<const char *>(&im), sizeof(double));
        }
    }

    observation_dump read_observation(const std::string &file)
    {
        auto f = open_in(file, std::ios::binary);
        double header[8];
        f.read(reinterpret_cast<char *>(header), sizeof(header));
        if (!f || header[0] != obs_magic)
            throw config_error("not an observation dump: " + file);
        observation_dump d;
        d.m_f = static_cast<arma::uword>(header[1]);
        d.m_r = static_cast<arma::uword>(header[2]);
        d.m_t = static_cast<arma::uword>(header[3]);
        d.n_snap = static_cast<arma::uword>(header[4]);
        d.noise_var = header[5];
        d.y.set_size(d.m_f * d.m_r * d.m_t * d.n_snap);
        for (arma::uword i = 0; i < d.y.n_elem; ++i)
        {
            double re, im;
            f.read(reinterpret_cast<char *>(&re), sizeof(double));
            f.read(reinterpret_cast<char *>(&im), sizeof(double));
            d.y(i) = cxd(re, im);
        }
        if (!f)
            throw config_error("truncated observation dump: " + file);
        return d;
    }

    void write_spectrum_csv(const std::string &file, const spectrum_grid &spec)
    {
        auto f = open_out(file);
        f << "tau_ns,nu_hz,power_db\n";
        for (arma::uword i = 0; i < spec.tau_s.n_elem; ++i)
            for (arma::uword k = 0; k < spec.nu_hz.n_elem; ++k)
            {
                const double p = spec.power(i, k);
                const double db = p > 0.0 ? 10.0 * std::log10(p) : -300.0;
                f << fmt(spec.tau_s(i) * 1e9) << "," << fmt(spec.nu_hz(k)) << ","
                  << fmt(db) << "\n";
            }
    }

    void write_trace_csv(const std::string &file, const std::vector<anneal_record> &trace)
    {
        auto f = open_out(file);
        f << "iteration,temperature,cost,accepted,best\n";
        for (const auto &r : trace)
            f << r.iteration << "," << fmt(r.temperature) << "," << fmt(r.candidate_cost)
              << "," << (r.accepted ? 1 : 0) << "," << fmt(r.best_cost) << "\n";
    }

    std::vector<anneal_record> read_trace_csv(const std::string &file)
    {
        auto f = open_in(file);
        std::string line;
        std::getline(f, line); // header
        std::vector<anneal_record> out;
        while (std::getline(f, line))
        {
            if (line.empty())
                continue;
            auto toks = split_csv_line(line);
            if (toks.size() != 5)
                throw config_error("trace CSV row length mismatch: " + file);
            anneal_record r;
            r.iteration = std::stoul(toks[0]);
            r.temperature = std::stod(toks[1]);
            r.candidate_cost = std::stod(toks[2]);
            r.accepted = std::stoi(toks[3]) != 0;
            r.best_cost = std::stod(toks[4]);
            out.push_back(r);
        }
        return out;
    }

    void write_rmse_csv(const std::string &file, const std::vector<rmse_cell> &table)
    {
        auto f = open_out(file);
        f << "schedule_label,snr_db,parameter,rmse,sqrt_crlb,n_fail\n";
        for (const auto &c : table)
            f << c.schedule_label << "," << fmt(c.snr_db) << "," << c.parameter << ","
              << fmt(c.rmse) << "," << fmt(c.sqrt_crlb) << "," << c.n_fail << "\n";
    }

    std::vector<rmse_cell> read_rmse_csv(const std::string &file)
    {
        auto f = open_in(file);
        std::string line;
        std::getline(f, line);
        std::vector<rmse_cell> out;
        while (std::getline(f, line))
        {
            if (line.empty())
                continue;
            auto toks = split_csv_line(line);
            if (toks.size() != 6)
                throw config_error("RMSE CSV row length mismatch: " + file);
            rmse_cell c;
            c.schedule_label = toks[0];
            c.snr_db = std::stod(toks[1]);
            c.parameter = toks[2];
            c.rmse = std::stod(toks[3]);
            c.sqrt_crlb = std::stod(toks[4]);
            c.n_fail = std::stoul(toks[5]);
            out.push_back(c);
        }
        return out;
    }

    void write_estimate_report_json(const std::string &file,
                                    const std::vector<path_estimate> &estimates)
    {
        nlohmann::json root;
        root["paths"] = nlohmann::json::array();
        for (const auto &e : estimates)
        {
            nlohmann::json p;
            p["tau_ns"] = e.p.tau_s * 1e9;
            p["phi_t_deg"] = e.p.phi_t_rad * 180.0 / pi;
            p["phi_r_deg"] = e.p.phi_r_rad * 180.0 / pi;
            p["nu_hz"] = e.p.nu_hz;
            p["gain_re"] = e.p.gain.real();
            p["gain_im"] = e.p.gain.imag();
            p["gain_db"] = 20.0 * std::log10(std::abs(e.p.gain));
            p["iterations"] = e.iterations;
            p["residual_norm"] = e.residual_norm;
            p["converged"] = e.converged;
            root["paths"].push_back(p);
        }
        auto f = open_out(file);
        f << root.dump(2) << "\n";
    }

} // namespace swseq

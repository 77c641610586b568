#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>

#include "carlitz/cache.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/parse.hpp"
#include "carlitz/serialize.hpp"
#include "carlitz/zeta.hpp"

namespace carlitz::cli {

namespace {

std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    return default_cache_dir();
}

// Computes one report, going through the cache when a directory is set.
// Returns the JSON form (the canonical serialization either way).
nlohmann::json cached_report(const FieldCtx& F, const FqPoly& m,
                             const std::filesystem::path& cache_dir, bool oracle,
                             long long phi_limit) {
    std::string m_text = poly_to_string(F, m);
    std::filesystem::path file;
    if (!cache_dir.empty()) {
        file = cache_path(cache_dir, cache_key(F, m_text, oracle));
        if (auto hit = cache_load(file)) return *hit;
    }
    ZetaReport r = relative_zeta(F, m, ZetaOptions{oracle, phi_limit});
    nlohmann::json j = report_to_json(F, r);
    if (!file.empty()) cache_store(file, j);
    return j;
}

std::string scalar_str(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int run_user_command(const std::function<int()>& body) {
    try {
        return body();
    } catch (const InternalCheckError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // bad cache contents, I/O failures and the like
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int cmd_zeta(const ZetaArgs& args) {
    return run_user_command([&] {
        FieldCtx F = FieldCtx::make(args.p, args.n);
        FqPoly m = parse_modulus(args.modulus, F);
        nlohmann::json j =
            cached_report(F, m, resolve_cache_dir(args.cache_dir), args.oracle, args.phi_limit);
        if (args.format == "json") {
            std::cout << json_dump(j);
        } else {
            std::cout << report_to_text(F, report_from_json(j));
        }
        return 0;
    });
}

int cmd_table(const TableArgs& args) {
    return run_user_command([&] {
        FieldCtx F = FieldCtx::make(args.p, args.n);
        std::vector<FqPoly> moduli = all_monic_up_to(F, args.max_deg);
        std::vector<nlohmann::json> rows(moduli.size());
        std::filesystem::path cache_dir = resolve_cache_dir(args.cache_dir);

        std::string first_failure;
        std::mutex failure_mutex;
        try {
            parallel_for(moduli.size(), args.jobs, [&](std::size_t i) {
                try {
                    rows[i] = cached_report(F, moduli[i], cache_dir, args.oracle, args.phi_limit);
                } catch (const InternalCheckError& e) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (first_failure.empty())
                        first_failure = poly_to_string(F, moduli[i]) + ": " + e.what();
                    throw;
                }
            });
        } catch (const InternalCheckError&) {
            if (!first_failure.empty()) throw InternalCheckError("m = " + first_failure);
            throw;
        }

        std::ostringstream csv;
        csv << "q,m,Phi,N_m,h_minus,w_minus,p_coeffs,j_coeffs,checks_passed\n";
        for (const auto& j : rows) {
            bool all = true;
            for (const auto& [name, ok] : j.at("checks").items())
                if (!ok.get<bool>()) all = false;
            csv << j.at("q").get<long long>() << ","
                << csv_escape(j.at("modulus").get<std::string>()) << ","
                << j.at("phi").get<long long>() << "," << j.at("n_m").get<long long>() << ","
                << csv_escape(scalar_str(j.at("h_minus"))) << ","
                << csv_escape(scalar_str(j.at("w_minus"))) << ","
                << csv_escape(j.at("p_minus").dump()) << ","
                << csv_escape(j.at("j_poly").dump()) << "," << (all ? "true" : "false") << "\n";
        }
        if (args.out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(args.out, std::ios::trunc);
            if (!out) throw UserError("cannot write CSV file: " + args.out);
            out << csv.str();
        }
        return 0;
    });
}

int cmd_verify(const VerifyArgs& args) {
    return run_user_command([&] {
        FieldCtx F = FieldCtx::make(args.p, args.n);
        std::vector<FqPoly> moduli = all_monic_up_to(F, args.max_deg);
        struct Row {
            std::string m_text;
            std::map<std::string, bool> checks;
        };
        std::vector<Row> rows(moduli.size());

        parallel_for(moduli.size(), args.jobs, [&](std::size_t i) {
            const FqPoly& m = moduli[i];
            ZetaReport r = relative_zeta_nothrow(F, m, ZetaOptions{true, args.phi_limit});
            Row row{r.m_text, r.checks};
            bool inv = true;
            try {
                inv = invariance_trial(F, m, r, 0xC0FFEE + static_cast<unsigned long>(i));
            } catch (const Error&) {
                inv = false;
            }
            row.checks["generator_and_order_invariance"] = inv;
            rows[i] = std::move(row);
        });

        // stable column set
        std::vector<std::string> columns;
        for (const auto& row : rows)
            for (const auto& [name, ok] : row.checks)
                if (std::find(columns.begin(), columns.end(), name) == columns.end())
                    columns.push_back(name);
        std::sort(columns.begin(), columns.end());

        std::size_t width = 8;
        for (const auto& row : rows) width = std::max(width, row.m_text.size());

        std::cout << "check matrix (" << rows.size() << " moduli, q = " << F.q() << "):\n";
        for (std::size_t c = 0; c < columns.size(); ++c)
            std::cout << "  [" << c + 1 << "] " << columns[c] << "\n";
        bool any_fail = false;
        for (const auto& row : rows) {
            std::cout << row.m_text << std::string(width - row.m_text.size() + 2, ' ');
            for (const auto& col : columns) {
                auto it = row.checks.find(col);
                if (it == row.checks.end()) {
                    std::cout << " -";
                } else if (it->second) {
                    std::cout << " +";
                } else {
                    std::cout << " X";
                    any_fail = true;
                }
            }
            std::cout << "\n";
        }
        std::cout << (any_fail ? "RESULT: FAIL" : "RESULT: all checks passed") << "\n";
        return any_fail ? 2 : 0;
    });
}

} // namespace carlitz::cli

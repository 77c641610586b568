#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"relative congruence zeta polynomials and class numbers for "
                 "cyclotomic function fields over F_q[T]"};
    app.require_subcommand(1);

    carlitz::cli::ZetaArgs zeta;
    auto* zcmd = app.add_subcommand("zeta", "compute P_m^(-), J_m^(-) and h_m^- for one modulus");
    zcmd->add_option("--p", zeta.p, "characteristic (prime)")->required();
    zcmd->add_option("--n", zeta.n, "extension degree, q = p^n")->default_val(1);
    zcmd->add_option("--modulus", zeta.modulus, "monic modulus, e.g. \"T^2+1\" or \"1,0,1\"")
        ->required();
    zcmd->add_flag("--oracle", zeta.oracle, "also run the Dirichlet L-function cross-check");
    zcmd->add_option("--format", zeta.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    zcmd->add_option("--cache-dir", zeta.cache_dir, "report cache directory");
    zcmd->add_option("--phi-limit", zeta.phi_limit, "oracle group-order limit")->default_val(5000);

    carlitz::cli::TableArgs table;
    auto* tcmd = app.add_subcommand("table", "sweep all monic moduli up to a degree into a CSV");
    tcmd->add_option("--p", table.p, "characteristic (prime)")->required();
    tcmd->add_option("--n", table.n, "extension degree, q = p^n")->default_val(1);
    tcmd->add_option("--max-deg", table.max_deg, "largest modulus degree")->required();
    tcmd->add_flag("--oracle", table.oracle, "also run the Dirichlet L-function cross-check");
    tcmd->add_option("--out", table.out, "CSV output path (default: stdout)");
    tcmd->add_option("--jobs", table.jobs, "worker threads")->default_val(1);
    tcmd->add_option("--cache-dir", table.cache_dir, "report cache directory");
    tcmd->add_option("--phi-limit", table.phi_limit, "oracle group-order limit")->default_val(5000);

    carlitz::cli::VerifyArgs verify;
    auto* vcmd = app.add_subcommand("verify", "run the full invariant suite over a sweep");
    vcmd->add_option("--p", verify.p, "characteristic (prime)")->required();
    vcmd->add_option("--n", verify.n, "extension degree, q = p^n")->default_val(1);
    vcmd->add_option("--max-deg", verify.max_deg, "largest modulus degree")->required();
    vcmd->add_option("--jobs", verify.jobs, "worker threads")->default_val(1);
    vcmd->add_option("--phi-limit", verify.phi_limit, "oracle group-order limit")
        ->default_val(5000);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // flag errors are user errors
    }

    if (zcmd->parsed()) return carlitz::cli::cmd_zeta(zeta);
    if (tcmd->parsed()) return carlitz::cli::cmd_table(table);
    return carlitz::cli::cmd_verify(verify);
}

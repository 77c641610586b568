#ifndef CARLITZ_COMMANDS_HPP
#define CARLITZ_COMMANDS_HPP

#include <string>

namespace carlitz::cli {

struct ZetaArgs {
    long long p = 0;
    int n = 1;
    std::string modulus;
    bool oracle = false;
    std::string format = "text"; // text | json
    std::string cache_dir;
    long long phi_limit = 5000;
};

struct TableArgs {
    long long p = 0;
    int n = 1;
    int max_deg = 1;
    bool oracle = false;
    std::string out; // CSV path; empty = stdout
    unsigned jobs = 1;
    std::string cache_dir;
    long long phi_limit = 5000;
};

struct VerifyArgs {
    long long p = 0;
    int n = 1;
    int max_deg = 1;
    unsigned jobs = 1;
    long long phi_limit = 5000;
};

// exit codes: 0 success, 1 user error, 2 internal consistency failure
int cmd_zeta(const ZetaArgs& args);
int cmd_table(const TableArgs& args);
int cmd_verify(const VerifyArgs& args);

} // namespace carlitz::cli

#endif

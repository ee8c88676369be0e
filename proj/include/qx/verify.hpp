#ifndef QX_VERIFY_HPP
#define QX_VERIFY_HPP

#include "qx/identities.hpp"

#include <string>

namespace qx {

/// Result of one verification instance.
struct Report {
    std::string identity;
    std::string case_name;  // "O", "Sp", "Mat", or "-"
    int N = 0;
    std::map<std::string, std::string> params;
    bool holds = false;
    long long terms = 0;  // term count of the cleared difference (0 when exact)
    long long elapsed_ms = 0;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    int max_n = 0;         // 0 = default caps (N <= 3 for O/Mat, N <= 4 for Sp)
    bool symbolic_a = false;
    std::string case_filter;  // "", "O", "Sp", "Mat"
    int n_filter = 0;         // 0 = all sizes
    IndexSet index_set;       // jacobi/quasidet instance selector
    bool has_index_set = false;
};

/// The registered identity names, in suite declaration order.
const std::vector<std::string>& verify_names();

/// Run every instance of one identity (subject to the options' caps and
/// filters), sequentially, in declaration order.
std::vector<Report> run_verify(const std::string& name, const VerifyOptions& opt);

/// Run the whole suite with `jobs` concurrent workers; reports are returned
/// in declaration order regardless of scheduling.
std::vector<Report> run_suite(const VerifyOptions& opt, int jobs);

}  // namespace qx

#endif

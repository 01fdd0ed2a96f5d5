#pragma once

#include <string>

namespace capf {

enum class OutputFormat { Text, JsonLines };

// Runtime limits and report options. Flags win over CAPF_* environment
// variables, which win over these defaults.
struct Config {
    long order_cap = 2000;     // max |G| during closure enumeration
    long lattice_cap = 400;    // max |G| for full subgroup enumeration
    long series_cap = 100000;  // max number of chief series enumerated
    int workers = 0;           // 0 = hardware concurrency
    OutputFormat format = OutputFormat::Text;

    // Applies CAPF_ORDER_CAP, CAPF_LATTICE_CAP, CAPF_SERIES_CAP,
    // CAPF_WORKERS, CAPF_FORMAT on top of the built-in defaults.
    static Config from_env();

    int effective_workers() const;
};

OutputFormat parse_format(const std::string& text);

}  // namespace capf

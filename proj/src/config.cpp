#include "capfusion/config.hpp"

#include <cstdlib>
#include <thread>

#include "capfusion/errors.hpp"

namespace capf {

namespace {

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (!end || *end != '\0' || parsed <= 0)
        throw UsageError(std::string(name) + " must be a positive integer");
    return parsed;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "json-lines") return OutputFormat::JsonLines;
    throw UsageError("output format must be 'text' or 'json-lines'");
}

Config Config::from_env() {
    Config cfg;
    cfg.order_cap = env_long("CAPF_ORDER_CAP", cfg.order_cap);
    cfg.lattice_cap = env_long("CAPF_LATTICE_CAP", cfg.lattice_cap);
    cfg.series_cap = env_long("CAPF_SERIES_CAP", cfg.series_cap);
    cfg.workers = static_cast<int>(env_long("CAPF_WORKERS", cfg.workers == 0 ? 0 : cfg.workers));
    if (const char* f = std::getenv("CAPF_FORMAT"); f && *f) cfg.format = parse_format(f);
    return cfg;
}

int Config::effective_workers() const {
    if (workers > 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace capf

#pragma once

#include <map>
#include <string>

#include "zomega/gauss_sum.hpp"

namespace zomega {

/**
 * Append-only CSV cache of per-prime gtilde values, keyed by the rational
 * prime p with canonical pi = a + b*omega (b > 0).  Format: a magic header
 * line, a column header `p,a,b,re,im,err`, then one record per line with
 * strictly increasing p.  Loading validates every record; appends happen
 * under an advisory file lock.
 */
class GaussCache {
  public:
    explicit GaussCache(std::string path);

    /** Cached value if present, else compute via gtilde_prime and persist. */
    GaussSumValue get_or_compute(uint64_t p);

    size_t size() const { return mem_.size(); }
    const std::string& path() const { return path_; }

    /** Resolve the cache path: flag value, else $ZOMEGA_GAUSS_CACHE, else dot-dir. */
    static std::string resolve_path(const std::string& flag_value);

  private:
    void load();
    void append(uint64_t p, const EisensteinInt& pi, const GaussSumValue& v);

    std::string path_;
    std::map<uint64_t, GaussSumValue> mem_;
    uint64_t last_p_{0};
};

}  // namespace zomega

#include "zomega/cache.hpp"

#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zomega/factor.hpp"

namespace zomega {

namespace {
constexpr const char* kMagic = "# zomega-gauss-cache v1";
constexpr const char* kHeader = "p,a,b,re,im,err";
}  // namespace

std::string GaussCache::resolve_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ZOMEGA_GAUSS_CACHE"); env && *env) return env;
    return ".zomega-cache/gauss.csv";
}

GaussCache::GaussCache(std::string path) : path_(std::move(path)) { load(); }

void GaussCache::load() {
    std::ifstream in(path_);
    if (!in) return;  // cold cache
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": " + why);
    };
    if (!std::getline(in, line) || line != kMagic) {
        lineno = 1;
        fail("bad magic header");
    }
    ++lineno;
    if (!std::getline(in, line) || line != kHeader) {
        ++lineno;
        fail("bad column header");
    }
    ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        long long p, a, b;
        double re, im, err;
        char c1, c2, c3, c4, c5;
        if (!(ss >> p >> c1 >> a >> c2 >> b >> c3 >> re >> c4 >> im >> c5 >> err) || c1 != ',' ||
            c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',')
            fail("unparsable record");
        if (p <= 0 || uint64_t(p) % 3 != 1) fail("p not == 1 mod 3");
        if (a * a - a * b + b * b != p) fail("norm mismatch: a^2 - ab + b^2 != p");
        if (b <= 0) fail("non-canonical pi (need b > 0)");
        if (uint64_t(p) <= last_p_) fail("records not strictly increasing in p");
        if (std::abs(re * re + im * im - 1.0) > std::max(1e-9, 10.0 * err))
            fail("value off the unit circle beyond err");
        GaussSumValue v;
        v.value = {re, im};
        v.modulus_norm = p;
        v.provenance = Provenance::fast_prime;
        v.err_bound = err;
        mem_[uint64_t(p)] = v;
        last_p_ = uint64_t(p);
    }
}

void GaussCache::append(uint64_t p, const EisensteinInt& pi, const GaussSumValue& v) {
    if (p <= last_p_) return;  // keep the strictly-increasing invariant
    // create parent dot-directory if the default path is used
    auto slash = path_.rfind('/');
    if (slash != std::string::npos) ::mkdir(path_.substr(0, slash).c_str(), 0755);

    FILE* f = std::fopen(path_.c_str(), "a");
    if (!f) throw std::runtime_error("cache: cannot open " + path_ + " for append");
    int fd = ::fileno(f);
    ::flock(fd, LOCK_EX);
    // write headers if the file is empty
    struct stat st{};
    if (::fstat(fd, &st) == 0 && st.st_size == 0) std::fprintf(f, "%s\n%s\n", kMagic, kHeader);
    std::fprintf(f, "%llu,%lld,%lld,%.17g,%.17g,%.3g\n", (unsigned long long)p,
                 (long long)(pi.a), (long long)(pi.b), v.value.real(), v.value.imag(),
                 v.err_bound);
    std::fflush(f);
    ::flock(fd, LOCK_UN);
    std::fclose(f);
    last_p_ = p;
}

GaussSumValue GaussCache::get_or_compute(uint64_t p) {
    if (p % 3 != 1 || !is_rational_prime(p))
        throw domain_error("cache: p must be a prime == 1 mod 3");
    auto it = mem_.find(p);
    if (it != mem_.end()) return it->second;
    EisensteinInt pi = split_rational_prime(p).first;
    GaussSumValue v = gtilde_prime(pi);
    mem_[p] = v;
    append(p, pi, v);
    return v;
}

}  // namespace zomega

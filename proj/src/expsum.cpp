#include "wgcert/expsum.hpp"

#include "wgcert/exponents.hpp"
#include "wgcert/simd/phase_kernels.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wgcert {

namespace {

constexpr std::size_t kBlock = 4096;
constexpr std::uint64_t kFastModulusLimit = 1ULL << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if ((e & 1U) != 0) {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1U;
    }
    return r;
}

// alpha x^k mod 1 as a phase in [-1/2, 1/2], computed from the exact residue
// of (numerator * x^k) modulo the denominator of alpha.
class PhaseSource {
public:
    PhaseSource(long k, const Rational& alpha)
        : k_(static_cast<unsigned long>(k)), num_(alpha.numerator()), den_(alpha.denominator())
    {
        fast_ = den_ <= BigInt(static_cast<unsigned long>(kFastModulusLimit));
        if (fast_) {
            q_ = den_.get_ui();
            BigInt a;
            mpz_fdiv_r(a.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
            a_ = a.get_ui();
        }
    }

    double operator()(std::uint64_t x) const
    {
        if (fast_) {
            const std::uint64_t r = mul_mod(a_, pow_mod(x, k_, q_), q_);
            if (2 * static_cast<unsigned __int128>(r) > q_) {
                return -static_cast<double>(static_cast<long double>(q_ - r) / static_cast<long double>(q_));
            }
            return static_cast<double>(static_cast<long double>(r) / static_cast<long double>(q_));
        }
        BigInt xk;
        BigInt r;
        const BigInt xb(static_cast<unsigned long>(x));
        mpz_powm_ui(xk.get_mpz_t(), xb.get_mpz_t(), k_, den_.get_mpz_t());
        r = num_ * xk;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), den_.get_mpz_t());
        if (2 * r > den_) {
            return -mpq_class(den_ - r, den_).get_d();
        }
        return mpq_class(r, den_).get_d();
    }

private:
    unsigned long k_;
    BigInt num_;
    BigInt den_;
    bool fast_ = false;
    std::uint64_t q_ = 1;
    std::uint64_t a_ = 0;
};

simd::PhaseSum tree_reduce(const std::vector<simd::PhaseSum>& parts, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1) {
        return parts[lo];
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto a = tree_reduce(parts, lo, mid);
    const auto b = tree_reduce(parts, mid, hi);
    return {a.re + b.re, a.im + b.im};
}

// Sums e(phase(x_at(i))) for i in [0, count) in fixed blocks.
template <class XAt>
SumValue block_sum(std::uint64_t count, const PhaseSource& phase, XAt&& x_at, unsigned jobs)
{
    SumValue out;
    out.terms = count;
    if (count == 0) {
        return out;
    }
    const std::size_t blocks = static_cast<std::size_t>((count + kBlock - 1) / kBlock);
    std::vector<simd::PhaseSum> parts(blocks);

    auto work = [&](std::atomic<std::size_t>& next) {
        std::vector<double> buf(kBlock);
        for (std::size_t b = next++; b < blocks; b = next++) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
            const std::uint64_t end = std::min<std::uint64_t>(count, begin + kBlock);
            const std::size_t len = static_cast<std::size_t>(end - begin);
            for (std::size_t i = 0; i < len; ++i) {
                buf[i] = phase(x_at(begin + i));
            }
            parts[b] = simd::sum_unit_phases(std::span<const double>(buf.data(), len));
        }
    };

    std::atomic<std::size_t> next{0};
    const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(blocks)));
    if (n_threads == 1) {
        work(next);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < n_threads; ++j) {
            pool.emplace_back([&] { work(next); });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    const auto total = tree_reduce(parts, 0, parts.size());
    out.re = total.re;
    out.im = total.im;
    return out;
}

void check_sum_args(long k, std::uint64_t X)
{
    if (k < 1) {
        throw std::invalid_argument("Weyl sum requires k >= 1");
    }
    if (X > kDeskScaleMaxX) {
        throw std::invalid_argument("X=" + std::to_string(X) + " exceeds the desk-scale cap " +
                                    std::to_string(kDeskScaleMaxX));
    }
}

std::string fmt_double(double v, int digits = 10)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

} // namespace

RationalPoint make_point(std::int64_t a, std::uint64_t q, Rational beta)
{
    if (q == 0) {
        throw std::invalid_argument("rational point needs q >= 1");
    }
    const std::uint64_t abs_a = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    if (std::gcd(abs_a, q) != 1) {
        throw std::invalid_argument("rational point needs gcd(a,q) = 1, got " + std::to_string(a) + "/" +
                                    std::to_string(q));
    }
    return {a, q, std::move(beta)};
}

RationalPoint parse_alpha(std::string_view text)
{
    const std::string whole(text);
    std::size_t i = 0;
    auto digits = [&] {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
            ++i;
        }
        return text.substr(start, i - start);
    };
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    const auto a_str = digits();
    if (a_str.empty()) {
        throw std::invalid_argument("alpha must look like a/q or a/q+beta: '" + whole + "'");
    }
    std::string_view q_str = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        q_str = digits();
        if (q_str.empty()) {
            throw std::invalid_argument("alpha: missing denominator in '" + whole + "'");
        }
    }
    Rational beta(0);
    if (i < text.size()) {
        if (text[i] != '+' && text[i] != '-') {
            throw std::invalid_argument("alpha: expected +beta or -beta after a/q in '" + whole + "'");
        }
        beta = Rational::parse(text.substr(i));
    }
    try {
        const std::int64_t a = std::stoll(std::string(a_str));
        const std::uint64_t q = std::stoull(std::string(q_str));
        return make_point(negative ? -a : a, q, beta);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("alpha: a or q out of range in '" + whole + "'");
    }
}

double SumValue::modulus() const
{
    return std::hypot(re, im);
}

SumValue weyl_sum(long k, const RationalPoint& alpha, std::uint64_t X, const SumOptions& opt)
{
    check_sum_args(k, X);
    const PhaseSource phase(k, alpha.alpha());
    return block_sum(X, phase, [X](std::uint64_t i) { return X + 1 + i; }, opt.jobs);
}

SumValue prime_weyl_sum(long k, const RationalPoint& alpha, std::uint64_t X, const SumOptions& opt)
{
    check_sum_args(k, X);
    const PhaseSource phase(k, alpha.alpha());
    const std::vector<std::uint64_t> primes = primes_in_range(X, 2 * X);
    return block_sum(primes.size(), phase, [&primes](std::uint64_t i) { return primes[i]; }, opt.jobs);
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi <= lo || hi < 2) {
        return out;
    }
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (small[i] != 0) {
            base.push_back(i);
            for (std::uint64_t j = i * i; j <= root; j += i) {
                small[j] = 0;
            }
        }
    }
    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<char> seg;
    for (std::uint64_t start = std::max<std::uint64_t>(lo + 1, 2); start <= hi; start += kSegment) {
        const std::uint64_t end = std::min(hi, start + kSegment - 1);
        seg.assign(end - start + 1, 1);
        for (std::uint64_t p : base) {
            if (p * p > end) {
                break;
            }
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) {
                seg[j - start] = 0;
            }
        }
        for (std::uint64_t n = start; n <= end; ++n) {
            if (seg[n - start] != 0) {
                out.push_back(n);
            }
        }
    }
    return out;
}

double w_weight(long k, std::uint64_t q)
{
    if (k < 3) {
        throw std::invalid_argument("w_k(q) is defined for k >= 3");
    }
    if (q == 0) {
        throw std::invalid_argument("w_k(q) needs q >= 1");
    }
    double w = 1.0;
    auto factor = [&](std::uint64_t p, long e) {
        const long u = (e - 1) / k;
        const long v = e - u * k;
        const double pd = static_cast<double>(p);
        w *= v == 1 ? static_cast<double>(k) * std::pow(pd, -static_cast<double>(u) - 0.5)
                    : std::pow(pd, -static_cast<double>(u) - 1.0);
    };
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) {
            continue;
        }
        long e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        factor(p, e);
    }
    if (q > 1) {
        factor(q, 1);
    }
    return w;
}

ArcScan major_arc_scan(long k, std::uint64_t X, long q_max, const SumOptions& opt)
{
    if (k < 3) {
        throw std::invalid_argument("major_arc_scan requires k >= 3");
    }
    if (q_max < 1 || q_max > kScanMaxQ) {
        throw std::invalid_argument("q_max must lie in [1, 200]");
    }
    if (X < 1 || X > kScanMaxX) {
        throw std::invalid_argument("X must lie in [1, 10^6] for a scan");
    }
    ArcScan scan;
    scan.k = k;
    scan.X = X;
    scan.q_max = q_max;

    const double sk = sigma(k).approx();
    const double logx = std::log(static_cast<double>(X));
    scan.notes.emplace_back("exploratory comparison; the implied constant is unspecified, no pass/fail claim");
    scan.notes.emplace_back("major-arc denominators: q <= X^(k sigma_k) = " +
                            fmt_double(std::exp(static_cast<double>(k) * sk * logx)));
    if (k >= 4) {
        scan.notes.emplace_back("prime-sum arc parameter: X^(2 sigma_k/3) = " +
                                fmt_double(std::exp(2.0 * sk / 3.0 * logx)) + " <= P <= X^(9/20) = " +
                                fmt_double(std::exp(0.45 * logx)));
    }

    for (long q = 1; q <= q_max; ++q) {
        const auto uq = static_cast<std::uint64_t>(q);
        const double prediction = w_weight(k, uq) * static_cast<double>(X);
        for (long a = 0; a < q; ++a) {
            if (std::gcd(static_cast<std::uint64_t>(a), uq) != 1) {
                continue;
            }
            const SumValue f = weyl_sum(k, make_point(a, uq), X, opt);
            const double abs_f = f.modulus();
            scan.rows.push_back({a, uq, abs_f, prediction, abs_f / prediction});
        }
    }
    return scan;
}

std::string arc_scan_csv(const ArcScan& scan)
{
    std::ostringstream os;
    os << "# k=" << scan.k << " X=" << scan.X << " q_max=" << scan.q_max << "\n";
    for (const auto& n : scan.notes) {
        os << "# " << n << "\n";
    }
    os << "a,q,abs_f,w_q_X,ratio\n";
    for (const auto& r : scan.rows) {
        os << r.a << "," << r.q << "," << fmt_double(r.abs_f, 12) << "," << fmt_double(r.prediction, 12) << ","
           << fmt_double(r.ratio, 12) << "\n";
    }
    return os.str();
}

} // namespace wgcert

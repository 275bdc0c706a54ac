/**
 * Coefficient fields: exact rationals (GMP-backed) and prime fields F_p.
 *
 * CoefficientField is the runtime descriptor passed around the public API.
 * The arithmetic itself lives in the small policy types RationalField and
 * PrimeField, which the elimination templates are instantiated with; use
 * with_field() to dispatch from a descriptor to a policy.
 */
#ifndef BUCHSTAR_FIELD_HPP
#define BUCHSTAR_FIELD_HPP

#include <cctype>
#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "error.hpp"

namespace buchstar {

using Rational = boost::multiprecision::mpq_rational;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

class CoefficientField
{
public:
    enum class Kind { rationals, prime };

    static CoefficientField rationals() { return CoefficientField(Kind::rationals, 0); }

    static CoefficientField prime(std::uint32_t p)
    {
        if (!is_prime(p))
            throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
        return CoefficientField(Kind::prime, p);
    }

    /// Accepts "q" (rationals), "f2", "f3", or "f<p>" for any prime p (case-insensitive).
    static CoefficientField parse(const std::string& text)
    {
        std::string s;
        for (char c : text)
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (s == "q" || s == "rationals")
            return rationals();
        if (s.size() >= 2 && s[0] == 'f')
        {
            std::uint64_t p = 0;
            for (std::size_t i = 1; i < s.size(); ++i)
            {
                if (!std::isdigit(static_cast<unsigned char>(s[i])) || p > 0xFFFFFFFFull / 10)
                    throw DomainError("unrecognized field '" + text + "'");
                p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
            }
            if (p > 0x7FFFFFFFull)
                throw DomainError("field characteristic too large: " + text);
            return prime(static_cast<std::uint32_t>(p));
        }
        throw DomainError("unrecognized field '" + text + "' (expected q, f2, f3, or f<p>)");
    }

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    /// The characteristic; 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    /// Short tag used in reports and cache keys: "Q", "F2", ...
    std::string tag() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

    friend bool operator==(const CoefficientField& a, const CoefficientField& b)
    {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const CoefficientField& a, const CoefficientField& b) { return !(a == b); }

private:
    CoefficientField(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

/// Arithmetic policy for Q.
struct RationalField
{
    using value_type = Rational;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(std::int64_t x) const { return value_type(x); }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const
    {
        if (a == 0)
            throw DomainError("division by zero");
        return value_type(1) / a;
    }
    CoefficientField descriptor() const { return CoefficientField::rationals(); }
};

/// Arithmetic policy for F_p with residues in [0, p).
struct PrimeField
{
    using value_type = std::uint32_t;

    std::uint32_t p;

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    value_type from_int(std::int64_t x) const
    {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const
    {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p ? s - p : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>((std::uint64_t{a} * b) % p);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const
    {
        if (a == 0)
            throw DomainError("division by zero");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e)
        {
            if (e & 1)
                result = (result * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    CoefficientField descriptor() const { return CoefficientField::prime(p); }
};

/**
 * Invokes fn with the arithmetic policy matching the descriptor.  Both
 * instantiations must return the same type.
 */
template <typename Fn>
decltype(auto) with_field(const CoefficientField& field, Fn&& fn)
{
    if (field.is_rationals())
        return fn(RationalField{});
    return fn(PrimeField{field.characteristic()});
}

}   // namespace buchstar

#endif

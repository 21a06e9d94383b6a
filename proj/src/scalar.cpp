#include "skewinv/scalar.hpp"

#include "skewinv/errors.hpp"

namespace skewinv {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadT: return "BadT";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::MixedMultidegree: return "MixedMultidegree";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) fail(ErrorKind::Usage, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) fail(ErrorKind::Usage, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) {
        s += '/';
        s += q.get_den().get_str();
    }
    return s;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= gr_inverse(o);
}

GaussianRational gr_inverse(const GaussianRational& z) {
    Rational n = z.norm();
    if (n == 0) fail(ErrorKind::Usage, "division by zero scalar");
    return {z.re / n, -z.im / n};
}

std::string gr_to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string imag = rational_to_string(z.im) + "*i";
    if (z.re == 0) return imag;
    std::string s = rational_to_string(z.re);
    if (z.im > 0) s += '+';
    return s + imag;
}

GaussianRational gr_from_string(const std::string& s) {
    if (s.empty()) fail(ErrorKind::Usage, "empty scalar literal");
    if (s == "i" || s == "+i") return gr_i();
    if (s == "-i") return -gr_i();
    // Split at the sign that starts the imaginary part, if any.
    size_t split = std::string::npos;
    for (size_t p = 1; p < s.size(); ++p) {
        if (s[p] == '+' || (s[p] == '-' && s[p - 1] != '/' && s[p - 1] != '+' && s[p - 1] != '-')) {
            split = p;
        }
    }
    bool has_i = s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0;
    if (!has_i) {
        if (s.find('i') != std::string::npos) fail(ErrorKind::Usage, "bad scalar literal '" + s + "'");
        return {rational_from_string(s), Rational(0)};
    }
    std::string imag_part = s.substr(0, s.size() - 2);
    std::string real_part;
    if (split != std::string::npos) {
        real_part = s.substr(0, split);
        imag_part = s.substr(split, s.size() - 2 - split);
        if (!imag_part.empty() && imag_part[0] == '+') imag_part.erase(0, 1);
    }
    Rational re = real_part.empty() ? Rational(0) : rational_from_string(real_part);
    return {re, rational_from_string(imag_part)};
}

} // namespace skewinv

// Spin quantum numbers and Bloch-sphere directions.
//
// A spin S is stored exactly as the integer 2S so that half-integer spins
// never touch floating point. Loops over magnetic quantum numbers iterate
// over the integer 2m.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spincorr {

class SpinNumber {
  public:
    SpinNumber() = default;

    explicit SpinNumber(int twice_s) : twice_s_(twice_s) {
        if (twice_s < 0) throw std::invalid_argument("SpinNumber: 2S must be non-negative");
    }

    static SpinNumber from_twice(int twice_s) { return SpinNumber(twice_s); }

    // Accepts "3/2", "1.5", "2"; rejects anything that is not a non-negative
    // half-integer.
    static SpinNumber parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("SpinNumber: empty spin string");
        const auto slash = text.find('/');
        try {
            if (slash != std::string::npos) {
                std::size_t pos_num = 0, pos_den = 0;
                const std::string num_s = text.substr(0, slash);
                const std::string den_s = text.substr(slash + 1);
                const int num = std::stoi(num_s, &pos_num);
                const int den = std::stoi(den_s, &pos_den);
                if (pos_num != num_s.size() || pos_den != den_s.size())
                    throw std::invalid_argument("trailing characters");
                if (den == 1) return SpinNumber(2 * num);
                if (den == 2) return SpinNumber(num);
                throw std::invalid_argument("denominator must be 1 or 2");
            }
            std::size_t pos = 0;
            const double value = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
            const double doubled = 2.0 * value;
            const long long rounded = std::llround(doubled);
            if (std::abs(doubled - static_cast<double>(rounded)) > 1e-9)
                throw std::invalid_argument("not a half-integer");
            return SpinNumber(static_cast<int>(rounded));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("SpinNumber: invalid spin '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("SpinNumber: spin out of range '" + text + "'");
        }
    }

    int twice() const { return twice_s_; }
    int dimension() const { return twice_s_ + 1; }
    double value() const { return 0.5 * twice_s_; }
    bool is_half_integer() const { return (twice_s_ % 2) != 0; }

    // Magnetic quantum number for basis index i, ordered m = S, S-1, ..., -S.
    int twice_m(int index) const { return twice_s_ - 2 * index; }
    double m(int index) const { return 0.5 * twice_m(index); }

    std::string to_string() const {
        if (twice_s_ % 2 == 0) return std::to_string(twice_s_ / 2);
        return std::to_string(twice_s_) + "/2";
    }

    friend bool operator==(SpinNumber a, SpinNumber b) { return a.twice_s_ == b.twice_s_; }
    friend bool operator!=(SpinNumber a, SpinNumber b) { return !(a == b); }
    friend bool operator<(SpinNumber a, SpinNumber b) { return a.twice_s_ < b.twice_s_; }
    friend bool operator<=(SpinNumber a, SpinNumber b) { return a.twice_s_ <= b.twice_s_; }

  private:
    int twice_s_ = 0;
};

// Direction on the unit sphere, polar theta in [0, pi], azimuth phi in [0, 2pi).
struct BlochPoint {
    double theta = 0.0;
    double phi = 0.0;

    BlochPoint() = default;
    BlochPoint(double theta_, double phi_) : theta(theta_), phi(phi_) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw std::invalid_argument("BlochPoint: theta outside [0, pi]");
        if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
            throw std::invalid_argument("BlochPoint: phi outside [0, 2pi)");
    }
};

// Classical angular momentum of magnitude s pointing along a Bloch direction.
struct ClassicalMomentum {
    double magnitude = 0.0;
    BlochPoint direction;

    double z() const { return magnitude * std::cos(direction.theta); }
    double x() const { return magnitude * std::sin(direction.theta) * std::cos(direction.phi); }
    double y() const { return magnitude * std::sin(direction.theta) * std::sin(direction.phi); }
};

}  // namespace spincorr

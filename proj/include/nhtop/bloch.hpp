#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nhtop/matrix.hpp"

namespace nhtop {

struct KPoint {
    double kx = 0.0;
    double ky = 0.0;
    KPoint() = default;
    KPoint(double x) : kx(x) {}
    KPoint(double x, double y) : kx(x), ky(y) {}
};

// Uniform Brillouin-zone grid k_j = -pi + 2*pi*j/n, closed under k -> -k
// modulo a reciprocal vector.
struct BzGrid {
    int n1 = 501;
    int n2 = 1;

    static std::vector<double> axis(int n) {
        std::vector<double> ks(n);
        for (int j = 0; j < n; ++j) ks[j] = -M_PI + 2.0 * M_PI * j / n;
        return ks;
    }
    static int negate_index(int j, int n) { return (n - j) % n; }

    std::vector<KPoint> points(int spatial_dim) const {
        std::vector<KPoint> out;
        auto xs = axis(n1);
        if (spatial_dim == 1) {
            for (double k : xs) out.emplace_back(k);
        } else {
            auto ys = axis(n2 > 1 ? n2 : n1);
            for (double kx : xs)
                for (double ky : ys) out.emplace_back(kx, ky);
        }
        return out;
    }
};

// Serializable flat parameter record; the kind string selects a builder.
struct ModelParams {
    std::string kind;
    std::map<std::string, double> values;

    double at(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end())
            throw std::out_of_range("ModelParams: missing key '" + key + "' for kind '" + kind + "'");
        return it->second;
    }
    double get(const std::string& key, double fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    bool operator==(const ModelParams&) const = default;
};

struct BlochHamiltonian {
    int spatial_dim = 1;
    int band_count = 2;
    std::function<ComplexMatrix(const KPoint&)> evaluate;
    // empty when no closed form is known
    std::function<std::vector<Complex>(const KPoint&)> analytic_dispersion;
    ModelParams params;
};

} // namespace nhtop

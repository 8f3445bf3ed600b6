// Copyright 2026 The qcrb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcrb/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qcrb {

namespace {

class Counter {
   public:
    Counter(const Objective &f, const MinimizeOptions &opt, MinimizeResult &res) : f_(f), opt_(opt), res_(res) {
        res_.value = std::numeric_limits<double>::infinity();
    }

    bool exhausted() const { return res_.evaluations >= opt_.max_evals; }

    double operator()(const RVector &x) {
        if (exhausted()) {
            return std::numeric_limits<double>::max();
        }
        double v = f_(x);
        if (!std::isfinite(v)) {
            v = std::numeric_limits<double>::max();
        }
        ++res_.evaluations;
        if (v < res_.value) {
            res_.value = v;
            res_.x = x;
        }
        if (opt_.trace_every > 0 && res_.evaluations % opt_.trace_every == 0) {
            res_.trace.push_back(res_.value);
        }
        return v;
    }

   private:
    const Objective &f_;
    const MinimizeOptions &opt_;
    MinimizeResult &res_;
};

}  // namespace

MinimizeResult nelder_mead(const Objective &f, RVector x0, const MinimizeOptions &opt) {
    MinimizeResult res;
    Counter eval(f, opt, res);
    const Eigen::Index n = x0.size();
    if (n == 0) {
        eval(x0);
        return res;
    }
    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / dn;
    const double gamma = 0.75 - 1.0 / (2.0 * dn);
    const double delta = 1.0 - 1.0 / dn;

    std::vector<RVector> simplex(n + 1);
    std::vector<double> values(n + 1);
    std::vector<int> order(n + 1);
    double step = opt.initial_step;
    RVector start = std::move(x0);

    while (!eval.exhausted()) {
        simplex[0] = start;
        values[0] = eval(start);
        for (Eigen::Index i = 0; i < n && !eval.exhausted(); ++i) {
            simplex[i + 1] = start;
            simplex[i + 1](i) += step;
            values[i + 1] = eval(simplex[i + 1]);
        }
        while (!eval.exhausted()) {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
            const int best = order.front();
            const int worst = order.back();
            const int second = order[n - 1];
            double diameter = 0.0;
            for (Eigen::Index i = 0; i <= n; ++i) {
                diameter = std::max(diameter, (simplex[i] - simplex[best]).lpNorm<Eigen::Infinity>());
            }
            if (values[worst] - values[best] <= opt.ftol * (std::abs(values[best]) + 1e-300) || diameter < 1e-12) {
                break;
            }
            RVector centroid = RVector::Zero(n);
            for (Eigen::Index i = 0; i <= n; ++i) {
                if (i != worst) {
                    centroid += simplex[i];
                }
            }
            centroid /= dn;
            const RVector xr = centroid + alpha * (centroid - simplex[worst]);
            const double fr = eval(xr);
            if (fr < values[best]) {
                const RVector xe = centroid + beta * (xr - centroid);
                const double fe = eval(xe);
                if (fe < fr) {
                    simplex[worst] = xe;
                    values[worst] = fe;
                } else {
                    simplex[worst] = xr;
                    values[worst] = fr;
                }
                continue;
            }
            if (fr < values[second]) {
                simplex[worst] = xr;
                values[worst] = fr;
                continue;
            }
            const bool outside = fr < values[worst];
            const RVector xc = outside ? RVector(centroid + gamma * (xr - centroid))
                                       : RVector(centroid + gamma * (simplex[worst] - centroid));
            const double fc = eval(xc);
            if (fc < (outside ? fr : values[worst])) {
                simplex[worst] = xc;
                values[worst] = fc;
                continue;
            }
            for (Eigen::Index i = 0; i <= n && !eval.exhausted(); ++i) {
                if (i == best) {
                    continue;
                }
                simplex[i] = simplex[best] + delta * (simplex[i] - simplex[best]);
                values[i] = eval(simplex[i]);
            }
        }
        start = res.x;
        step = std::max(step * 0.5, 1e-4);
    }
    return res;
}

MinimizeResult fd_bfgs(const Objective &f, RVector x0, const MinimizeOptions &opt, double fd_step) {
    MinimizeResult res;
    Counter eval(f, opt, res);
    const Eigen::Index n = x0.size();
    RVector x = std::move(x0);
    double fx = eval(x);
    auto gradient = [&](const RVector &at) {
        RVector g(n);
        RVector probe = at;
        for (Eigen::Index i = 0; i < n; ++i) {
            probe(i) = at(i) + fd_step;
            const double fp = eval(probe);
            probe(i) = at(i) - fd_step;
            const double fm = eval(probe);
            probe(i) = at(i);
            g(i) = (fp - fm) / (2.0 * fd_step);
        }
        return g;
    };
    RMatrix h = RMatrix::Identity(n, n);
    RVector g = gradient(x);
    while (!eval.exhausted()) {
        RVector p = -h * g;
        if (p.dot(g) >= 0.0) {
            h.setIdentity();
            p = -g;
        }
        double t = 1.0;
        double ft = 0.0;
        RVector xt;
        bool accepted = false;
        for (int k = 0; k < 40 && !eval.exhausted(); ++k) {
            xt = x + t * p;
            ft = eval(xt);
            if (ft <= fx + 1e-4 * t * g.dot(p)) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            if (h.isIdentity()) {
                break;
            }
            h.setIdentity();
            continue;
        }
        const RVector gt = gradient(xt);
        const RVector s = xt - x;
        const RVector y = gt - g;
        x = xt;
        const double improvement = fx - ft;
        fx = ft;
        g = gt;
        const double sy = s.dot(y);
        if (sy > 1e-14 * s.norm() * y.norm()) {
            const double rho = 1.0 / sy;
            const RVector hy = h * y;
            h += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) - rho * (hy * s.transpose() + s * hy.transpose());
        }
        if (improvement <= opt.ftol * (std::abs(fx) + 1e-300) && g.norm() < 1e-10) {
            break;
        }
    }
    return res;
}

}  // namespace qcrb

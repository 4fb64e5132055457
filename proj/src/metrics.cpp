#include "octbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

namespace octbench {

double psnr(const Frame& a, const Frame& b, double max_val) {
    if (a.width != b.width || a.height != b.height)
        throw DimMismatchError("psnr: frame dims differ");
    const std::size_t n = a.pixels.size();
    double se = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        se += d * d;
    }
    if (se == 0.0) return kPsnrCap;
    const double mse = se / static_cast<double>(n);
    return 10.0 * std::log10(max_val * max_val / mse);
}

namespace {

std::vector<double> gaussian_window(int size, double sigma) {
    std::vector<double> w(size);
    const double c = (size - 1) * 0.5;
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        w[i] = std::exp(-((i - c) * (i - c)) / (2.0 * sigma * sigma));
        sum += w[i];
    }
    for (double& v : w) v /= sum;
    return w;
}

}  // namespace

double ssim(const Frame& a, const Frame& b, const SsimParams& p) {
    if (a.width != b.width || a.height != b.height)
        throw DimMismatchError("ssim: frame dims differ");
    const int w = a.width, h = a.height, win = p.window_size;
    if (w < win || h < win)
        throw TooSmallError("ssim: image smaller than the window");

    const std::vector<double> g = gaussian_window(win, p.window_sigma);
    const int vw = w - win + 1;  // valid (full-window) extent
    const int vh = h - win + 1;

    // Horizontal pass: weighted sums of a, b, a^2, b^2, ab per row.
    std::vector<double> ha(static_cast<std::size_t>(h) * vw), hb(ha.size()), haa(ha.size()),
        hbb(ha.size()), hab(ha.size());
#pragma omp parallel for
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* ra = a.pixels.data() + static_cast<std::size_t>(y) * w;
        const std::uint8_t* rb = b.pixels.data() + static_cast<std::size_t>(y) * w;
        const std::size_t o = static_cast<std::size_t>(y) * vw;
        for (int x = 0; x < vw; ++x) {
            double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
            for (int i = 0; i < win; ++i) {
                const double va = ra[x + i], vb = rb[x + i];
                sa += g[i] * va;
                sb += g[i] * vb;
                saa += g[i] * va * va;
                sbb += g[i] * vb * vb;
                sab += g[i] * (va * vb);  // grouping keeps ssim(a,b) bit-equal to ssim(b,a)
            }
            ha[o + x] = sa;
            hb[o + x] = sb;
            haa[o + x] = saa;
            hbb[o + x] = sbb;
            hab[o + x] = sab;
        }
    }

    const double C1 = p.c1(), C2 = p.c2();
    double total = 0.0;
#pragma omp parallel for reduction(+ : total)
    for (int y = 0; y < vh; ++y) {
        for (int x = 0; x < vw; ++x) {
            double mu_a = 0, mu_b = 0, e_aa = 0, e_bb = 0, e_ab = 0;
            for (int i = 0; i < win; ++i) {
                const std::size_t o = static_cast<std::size_t>(y + i) * vw + x;
                mu_a += g[i] * ha[o];
                mu_b += g[i] * hb[o];
                e_aa += g[i] * haa[o];
                e_bb += g[i] * hbb[o];
                e_ab += g[i] * hab[o];
            }
            const double var_a = e_aa - mu_a * mu_a;
            const double var_b = e_bb - mu_b * mu_b;
            const double cov = e_ab - mu_a * mu_b;
            const double num = (2.0 * (mu_a * mu_b) + C1) * (2.0 * cov + C2);
            const double den = (mu_a * mu_a + mu_b * mu_b + C1) * (var_a + var_b + C2);
            total += num / den;
        }
    }
    return total / (static_cast<double>(vw) * vh);
}

std::pair<double, double> volume_pixel_scores(const OctVolume& pred, const OctVolume& gt,
                                              const SsimParams& p) {
    if (pred.frames.size() != gt.frames.size())
        throw DimMismatchError("volume_pixel_scores: frame count differs");
    double psum = 0.0, ssum = 0.0;
    for (std::size_t k = 0; k < pred.frames.size(); ++k) {
        psum += psnr(pred.frames[k], gt.frames[k]);
        ssum += ssim(pred.frames[k], gt.frames[k], p);
    }
    const double n = static_cast<double>(pred.frames.size());
    return {psum / n, ssum / n};
}

Embedding embed_volume(const OctVolume& volume) {
    Embedding e;
    e.values.reserve(kReferenceEmbeddingDim);
    for (const Frame& f : volume.frames) {
        for (int r = 0; r < 4; ++r) {
            const int y0 = r * f.height / 4, y1 = (r + 1) * f.height / 4;
            for (int c = 0; c < 4; ++c) {
                const int x0 = c * f.width / 4, x1 = (c + 1) * f.width / 4;
                double sum = 0.0;
                for (int y = y0; y < y1; ++y)
                    for (int x = x0; x < x1; ++x) sum += f.at(x, y);
                const double cells = static_cast<double>(y1 - y0) * (x1 - x0);
                e.values.push_back(sum / (cells * 255.0));
            }
        }
    }
    for (std::size_t k = 0; k + 1 < volume.frames.size(); ++k) {
        const Frame& fa = volume.frames[k];
        const Frame& fb = volume.frames[k + 1];
        double sum = 0.0;
        for (std::size_t i = 0; i < fa.pixels.size(); ++i)
            sum += std::abs(static_cast<double>(fa.pixels[i]) - static_cast<double>(fb.pixels[i]));
        e.values.push_back(sum / (static_cast<double>(fa.pixels.size()) * 255.0));
    }
    return e;
}

GaussianStats gaussian_stats(const std::vector<Embedding>& set) {
    if (set.size() < 2) throw TooFewSamplesError("gaussian_stats requires n >= 2");
    const std::size_t d = set[0].dim();
    for (const auto& e : set)
        if (e.dim() != d) throw DimMismatchError("gaussian_stats: embedding dims differ");
    const double n = static_cast<double>(set.size());

    GaussianStats s;
    s.mu.assign(d, 0.0);
    for (const auto& e : set)
        for (std::size_t i = 0; i < d; ++i) s.mu[i] += e.values[i];
    for (double& v : s.mu) v /= n;

    s.sigma.assign(d * d, 0.0);
    for (const auto& e : set) {
        for (std::size_t i = 0; i < d; ++i) {
            const double di = e.values[i] - s.mu[i];
            for (std::size_t j = i; j < d; ++j)
                s.sigma[i * d + j] += di * (e.values[j] - s.mu[j]);
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const double v = s.sigma[i * d + j] / (n - 1.0);
            s.sigma[i * d + j] = v;
            s.sigma[j * d + i] = v;  // (S + S^T)/2 by construction
        }
    return s;
}

namespace {

using Matrix = Eigen::MatrixXd;

Matrix sym_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()));
    if (es.info() != Eigen::Success)
        throw NumericalFailure("eigendecomposition did not converge");
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

double frechet_distance(const GaussianStats& a, const GaussianStats& b) {
    const std::size_t d = a.dim();
    if (b.dim() != d) throw DimMismatchError("frechet_distance: dims differ");

    double mu_term = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double dm = a.mu[i] - b.mu[i];
        mu_term += dm * dm;
    }

    Eigen::Map<const Matrix> sa(a.sigma.data(), d, d);
    Eigen::Map<const Matrix> sb(b.sigma.data(), d, d);
    const Matrix sa_half = sym_sqrt(sa);
    const Matrix inner = sa_half * sb * sa_half;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (inner + inner.transpose()));
    if (es.info() != Eigen::Success)
        throw NumericalFailure("eigendecomposition did not converge");
    const double tr_sqrt = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();

    const double fd = mu_term + sa.trace() + sb.trace() - 2.0 * tr_sqrt;
    return std::max(fd, 0.0);
}

Embedder reference_embedder() {
    return [](const std::string&, const OctVolume& v) { return embed_volume(v); };
}

Embedder table_embedder(std::map<std::string, Embedding> table) {
    return [table = std::move(table)](const std::string& id, const OctVolume&) {
        auto it = table.find(id);
        if (it == table.end())
            throw UnknownSampleError("no external embedding for sample: " + id);
        return it->second;
    };
}

namespace {

// Regularize a near-singular covariance: add eps*I when the spectrum dips
// measurably below zero.
void regularize(GaussianStats& s) {
    const std::size_t d = s.dim();
    Eigen::Map<const Matrix> m(s.sigma.data(), d, d);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("eigendecomposition did not converge");
    const double norm = std::max(std::abs(es.eigenvalues().minCoeff()),
                                 std::abs(es.eigenvalues().maxCoeff()));
    if (es.eigenvalues().minCoeff() < -1e-8 * norm) {
        const double eps = 1e-6 * m.trace() / static_cast<double>(d);
        for (std::size_t i = 0; i < d; ++i) s.sigma[i * d + i] += eps;
    }
}

double fvd_from_sorted(const std::vector<Embedding>& pred, const std::vector<Embedding>& gt) {
    GaussianStats sp = gaussian_stats(pred);
    GaussianStats sg = gaussian_stats(gt);
    regularize(sp);
    regularize(sg);
    return frechet_distance(sp, sg);
}

}  // namespace

double fvd(const std::vector<std::pair<std::string, OctVolume>>& pred_set,
           const std::vector<std::pair<std::string, OctVolume>>& gt_set,
           const Embedder& embedder) {
    if (pred_set.size() < 2 || gt_set.size() < 2)
        throw TooFewSamplesError("fvd requires at least 2 volumes per set");
    auto embed_sorted = [&](const std::vector<std::pair<std::string, OctVolume>>& set) {
        std::vector<const std::pair<std::string, OctVolume>*> order;
        order.reserve(set.size());
        for (const auto& p : set) order.push_back(&p);
        std::sort(order.begin(), order.end(),
                  [](const auto* a, const auto* b) { return a->first < b->first; });
        std::vector<Embedding> out(order.size());
        std::exception_ptr err;
#pragma omp parallel for
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(order.size()); ++i) {
            try {
                out[i] = embedder(order[i]->first, order[i]->second);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return out;
    };
    return fvd_from_sorted(embed_sorted(pred_set), embed_sorted(gt_set));
}

double fvd_from_embeddings(const std::map<std::string, Embedding>& pred,
                           const std::map<std::string, Embedding>& gt) {
    if (pred.size() < 2 || gt.size() < 2)
        throw TooFewSamplesError("fvd requires at least 2 embeddings per set");
    std::vector<Embedding> p, g;
    for (const auto& [id, e] : pred) p.push_back(e);
    for (const auto& [id, e] : gt) g.push_back(e);
    return fvd_from_sorted(p, g);
}

std::map<std::string, Embedding> load_external_embeddings(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFoundError("cannot open embeddings: " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty embeddings file");
    if (header.rfind("sample_id,", 0) != 0)
        throw ParseError("embeddings CSV must start with a sample_id column");

    std::map<std::string, Embedding> table;
    std::size_t dim = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::stringstream ss(line);
        std::string id;
        if (!std::getline(ss, id, ',')) throw ParseError("bad embeddings row: " + line);
        Embedding e;
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                e.values.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ParseError("non-numeric embedding value: " + tok);
            }
        }
        if (e.values.empty()) throw ParseError("embedding row has no values: " + line);
        if (dim == 0) dim = e.dim();
        if (e.dim() != dim)
            throw InconsistentDimError("embedding dim " + std::to_string(e.dim()) +
                                       " != " + std::to_string(dim) + " for " + id);
        if (!table.emplace(id, std::move(e)).second)
            throw DuplicateSampleIdError("duplicate embedding sample_id: " + id);
    }
    return table;
}

void save_embeddings(const std::map<std::string, Embedding>& table,
                     const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write embeddings: " + path.string());
    const std::size_t d = table.empty() ? 0 : table.begin()->second.dim();
    out << "sample_id";
    for (std::size_t i = 0; i < d; ++i) out << ",v" << i;
    out << "\n";
    char buf[32];
    for (const auto& [id, e] : table) {
        out << id;
        for (double v : e.values) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << "\n";
    }
}

}  // namespace octbench

#include "octbench/run_config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace octbench {

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFoundError("cannot open config: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad config JSON in " + path.string() + ": " + e.what());
    }

    RunConfig c;
    try {
        if (j.contains("dataset")) c.dataset = j["dataset"].get<std::string>();
        if (j.contains("split")) c.split = split_from_string(j["split"].get<std::string>());
        if (j.contains("ssim")) {
            const auto& s = j["ssim"];
            c.ssim.k1 = s.value("k1", c.ssim.k1);
            c.ssim.k2 = s.value("k2", c.ssim.k2);
            c.ssim.dynamic_range = s.value("dynamic_range", c.ssim.dynamic_range);
            c.ssim.window_size = s.value("window_size", c.ssim.window_size);
            c.ssim.window_sigma = s.value("window_sigma", c.ssim.window_sigma);
        }
        if (j.contains("preprocess")) {
            const auto& p = j["preprocess"];
            c.preprocess.border_tau = p.value("border_tau", c.preprocess.border_tau);
            c.preprocess.keep_v = p.value("keep_v", c.preprocess.keep_v);
            c.preprocess.keep_h = p.value("keep_h", c.preprocess.keep_h);
            c.preprocess.fundus_resize = p.value("fundus_resize", c.preprocess.fundus_resize);
            c.preprocess.sequence_resize =
                p.value("sequence_resize", c.preprocess.sequence_resize);
            c.preprocess.oriented_w = p.value("oriented_w", c.preprocess.oriented_w);
            c.preprocess.oriented_h = p.value("oriented_h", c.preprocess.oriented_h);
            if (p.contains("ruler")) {
                const auto& r = p["ruler"];
                c.preprocess.ruler = {r.value("x0", 0), r.value("y0", 0), r.value("w", 90),
                                      r.value("h", 40)};
            }
        }
        if (j.contains("corruption")) {
            const auto& k = j["corruption"];
            c.corruption.kind =
                corruption_kind_from_string(k.value("kind", std::string("identity")));
            c.corruption.steps = k.value("steps", 0);
            c.corruption.scale_lo = k.value("scale_lo", 0.7);
            c.corruption.scale_hi = k.value("scale_hi", 0.9);
            c.corruption.seed = k.value("seed", 0ull);
        }
        if (j.contains("pred_embeddings"))
            c.pred_embeddings = j["pred_embeddings"].get<std::string>();
        if (j.contains("gt_embeddings")) c.gt_embeddings = j["gt_embeddings"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad config schema in " + path.string() + ": " + e.what());
    }
    return c;
}

}  // namespace octbench

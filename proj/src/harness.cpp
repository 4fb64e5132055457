#include "octbench/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace octbench {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

MetricReport evaluate_volumes(const std::string& submission_id,
                              const std::map<std::string, OctVolume>& pred,
                              const std::map<std::string, OctVolume>& gt,
                              const EvalConfig& config) {
    if (pred.size() != gt.size())
        throw DimMismatchError("evaluate: prediction/ground-truth set sizes differ");

    std::vector<const std::string*> ids;
    ids.reserve(gt.size());
    for (const auto& [id, vol] : gt) {
        if (!pred.count(id)) throw UnknownSampleError("submission lacks sample: " + id);
        ids.push_back(&id);
    }

    MetricReport report;
    report.submission_id = submission_id;
    report.per_sample.resize(ids.size());

    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ids.size()); ++i) {
        try {
            const std::string& id = *ids[i];
            const auto [p, s] = volume_pixel_scores(pred.at(id), gt.at(id), config.ssim);
            report.per_sample[i] = {id, p, s};
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    double psum = 0.0, ssum = 0.0;
    for (const auto& s : report.per_sample) {
        psum += s.psnr;
        ssum += s.ssim;
    }
    report.psnr_mean = psum / static_cast<double>(ids.size());
    report.ssim_mean = ssum / static_cast<double>(ids.size());

    if (config.pred_embeddings || config.gt_embeddings) {
        if (!config.pred_embeddings || !config.gt_embeddings)
            throw ParseError("external embeddings require both a pred and a gt table");
        auto pick = [&](const std::filesystem::path& path) {
            const auto table = load_external_embeddings(path);
            std::map<std::string, Embedding> out;
            for (const auto* id : ids) {
                auto it = table.find(*id);
                if (it == table.end())
                    throw UnknownSampleError("no embedding for sample " + *id + " in " +
                                             path.string());
                out.emplace(*id, it->second);
            }
            return out;
        };
        report.fvd = fvd_from_embeddings(pick(*config.pred_embeddings),
                                         pick(*config.gt_embeddings));
    } else {
        std::vector<std::pair<std::string, OctVolume>> pv, gv;
        for (const auto* id : ids) {
            pv.emplace_back(*id, pred.at(*id));
            gv.emplace_back(*id, gt.at(*id));
        }
        report.fvd = fvd(pv, gv, reference_embedder());
    }
    return report;
}

MetricReport evaluate(const Manifest& manifest, Split split,
                      const std::filesystem::path& submission_dir, const EvalConfig& config) {
    const auto id_list = manifest.sample_ids(split);
    const std::set<std::string> expected(id_list.begin(), id_list.end());
    SubmissionSet submission = scan_submission(submission_dir, expected);

    std::map<std::string, OctVolume> gt;
    for (const std::string& id : id_list)
        gt.emplace(id, load_volume(manifest.root / manifest.find(id)->oct_dir));

    return evaluate_volumes(submission.submission_id, submission.volumes, gt, config);
}

std::vector<LeaderboardEntry> rank(const std::vector<MetricReport>& reports) {
    if (reports.empty()) throw EmptyInputError("rank: no reports");
    std::set<std::string> ids;
    for (const auto& r : reports)
        if (!ids.insert(r.submission_id).second)
            throw DuplicateSubmissionIdError("duplicate submission_id: " + r.submission_id);

    std::vector<const MetricReport*> order;
    for (const auto& r : reports) order.push_back(&r);
    std::sort(order.begin(), order.end(), [](const MetricReport* a, const MetricReport* b) {
        if (a->fvd != b->fvd) return a->fvd < b->fvd;
        if (a->ssim_mean != b->ssim_mean) return a->ssim_mean > b->ssim_mean;
        if (a->psnr_mean != b->psnr_mean) return a->psnr_mean > b->psnr_mean;
        return a->submission_id < b->submission_id;
    });

    std::vector<LeaderboardEntry> board;
    for (std::size_t i = 0; i < order.size(); ++i)
        board.push_back({static_cast<int>(i + 1), order[i]->submission_id, order[i]->fvd,
                         order[i]->ssim_mean, order[i]->psnr_mean});
    return board;
}

std::string report_to_json(const MetricReport& r) {
    std::ostringstream out;
    out << "{\"submission_id\":\"" << json_escape(r.submission_id) << "\","
        << "\"fvd\":" << fmt6(r.fvd) << ","
        << "\"ssim_mean\":" << fmt6(r.ssim_mean) << ","
        << "\"psnr_mean\":" << fmt6(r.psnr_mean) << ",\"per_sample\":[";
    for (std::size_t i = 0; i < r.per_sample.size(); ++i) {
        const auto& s = r.per_sample[i];
        if (i) out << ",";
        out << "{\"sample_id\":\"" << json_escape(s.sample_id) << "\",\"psnr\":" << fmt6(s.psnr)
            << ",\"ssim\":" << fmt6(s.ssim) << "}";
    }
    out << "]}";
    return out.str();
}

void write_report_json(const MetricReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report: " + path.string());
    out << report_to_json(report) << "\n";
}

MetricReport report_from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFoundError("cannot open report: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad report JSON in " + path.string() + ": " + e.what());
    }
    MetricReport r;
    try {
        r.submission_id = j.at("submission_id").get<std::string>();
        r.fvd = j.at("fvd").get<double>();
        r.ssim_mean = j.at("ssim_mean").get<double>();
        r.psnr_mean = j.at("psnr_mean").get<double>();
        for (const auto& s : j.value("per_sample", nlohmann::json::array()))
            r.per_sample.push_back({s.at("sample_id").get<std::string>(),
                                    s.at("psnr").get<double>(), s.at("ssim").get<double>()});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad report schema in " + path.string() + ": " + e.what());
    }
    return r;
}

std::string report_to_csv(const MetricReport& r) {
    std::ostringstream out;
    out << "submission_id,sample_id,psnr,ssim\n";
    for (const auto& s : r.per_sample)
        out << r.submission_id << "," << s.sample_id << "," << fmt6(s.psnr) << ","
            << fmt6(s.ssim) << "\n";
    return out.str();
}

std::string leaderboard_to_csv(const std::vector<LeaderboardEntry>& board) {
    std::ostringstream out;
    out << "rank,submission_id,fvd,ssim_mean,psnr_mean\n";
    for (const auto& e : board)
        out << e.rank << "," << e.submission_id << "," << fmt6(e.fvd) << ","
            << fmt6(e.ssim_mean) << "," << fmt6(e.psnr_mean) << "\n";
    return out.str();
}

}  // namespace octbench

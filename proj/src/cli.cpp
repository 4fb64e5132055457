#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "octbench/augment.hpp"
#include "octbench/baselines.hpp"
#include "octbench/harness.hpp"
#include "octbench/image_io.hpp"
#include "octbench/preprocess.hpp"
#include "octbench/run_config.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace octbench {

namespace {

namespace fs = std::filesystem;

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write output: " + out_path);
    out << text;
}

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int run_validate(const std::string& dataset, const std::string& split_name,
                 const std::string& submission) {
    const Manifest manifest = parse_manifest(fs::path(dataset) / "manifest.csv");
    const auto ids = manifest.sample_ids(split_from_string(split_name));
    try {
        SubmissionSet set = scan_submission(submission, {ids.begin(), ids.end()});
        for (const auto& w : set.warnings) std::cerr << "warning: " << w << "\n";
        std::cerr << "submission valid: " << set.volumes.size() << " complete volumes\n";
        return 0;
    } catch (const IncompleteSubmissionError& e) {
        std::cerr << "invalid submission:\n";
        for (const auto& d : e.defects) std::cerr << "  " << d << "\n";
        return 1;
    }
}

int run_preprocess(const std::string& op, const std::string& input, const std::string& output,
                   const RunConfig& cfg, int direction) {
    const PreprocessConfig& pp = cfg.preprocess;
    if (op == "crop-border") {
        FundusImage img = load_fundus(input);
        img = crop_black_border(img, pp.border_tau);
        save_image(resize_bilinear(img, pp.fundus_resize, pp.fundus_resize), output);
    } else if (op == "mask-roi") {
        save_image(mask_central_roi(load_fundus(input), pp.keep_v, pp.keep_h), output);
    } else if (op == "orient") {
        FundusImage img = orient_for_direction(load_fundus(input), direction);
        img = mask_central_roi(img, pp.keep_v, pp.keep_h);
        save_image(resize_bilinear(img, pp.oriented_w, pp.oriented_h), output);
    } else if (op == "remove-ruler") {
        Frame f = load_frame(input);
        RulerRegion r = pp.ruler;
        // default region sits at the bottom-left corner of the frame
        if (r.y0 == 0 && r.h <= f.height) r.y0 = f.height - r.h;
        save_image(remove_ruler(f, r), output);
    } else if (op == "truncate") {
        const NormalizedFrame n = truncate_normalize(load_frame(input));
        Frame f(n.width, n.height);
        for (std::size_t i = 0; i < n.values.size(); ++i)
            f.pixels[i] = static_cast<std::uint8_t>(std::lround(n.values[i] * 255.0f));
        save_image(f, output);
    } else if (op == "sequences") {
        FundusImage img = load_fundus(input);
        if (img.width != pp.sequence_resize || img.height != pp.sequence_resize)
            img = resize_bilinear(img, pp.sequence_resize, pp.sequence_resize);
        const SequenceStack stack = extract_sequences(img);
        std::ostringstream out;
        out << "direction,offset";
        for (int i = 0; i < SequenceStack::kLength; ++i) out << ",s" << i;
        out << "\n";
        for (int k = 0; k < SequenceStack::kDirs; ++k)
            for (int j = 0; j < SequenceStack::kWidth; ++j) {
                out << k << "," << j;
                for (int i = 0; i < SequenceStack::kLength; ++i) {
                    char buf[16];
                    std::snprintf(buf, sizeof(buf), "%.6f", stack.at(k, j, i));
                    out << ',' << buf;
                }
                out << "\n";
            }
        write_text(out.str(), output);
    } else {
        std::cerr << "unknown preprocess op: " << op << "\n";
        return 2;
    }
    return 0;
}

int run_augment(const std::string& fundus_path, const std::string& oct_dir,
                const std::string& out_dir, bool flip, std::uint64_t photo_seed,
                bool photometric) {
    FundusImage fundus = load_fundus(fundus_path);
    OctVolume volume = load_volume(oct_dir);
    if (flip) std::tie(fundus, volume) = collaborative_flip(fundus, volume);
    if (photometric) fundus = photometric_augment(fundus, sample_photometric(photo_seed));
    fs::create_directories(out_dir);
    save_image(fundus, fs::path(out_dir) / "fundus.png");
    for (int k = 0; k < OctVolume::kFrameCount; ++k)
        save_image(volume.frames[k], fs::path(out_dir) / (std::to_string(k) + ".png"));
    return 0;
}

int run_corrupt(const std::string& dataset, const std::string& split_name,
                const CorruptionSpec& spec, const std::string& out_dir) {
    const Manifest manifest = parse_manifest(fs::path(dataset) / "manifest.csv");
    const SubmissionSet set =
        generate_baseline_submission(manifest, split_from_string(split_name), spec, out_dir);
    std::cerr << "wrote " << set.volumes.size() << " corrupted volumes to " << out_dir << "\n";
    return 0;
}

int run_embed(const std::string& dataset, const std::string& split_name,
              const std::string& submission, const std::string& out_path) {
    std::map<std::string, Embedding> table;
    if (!submission.empty()) {
        const Manifest manifest = parse_manifest(fs::path(dataset) / "manifest.csv");
        const auto ids = manifest.sample_ids(split_from_string(split_name));
        const SubmissionSet set = scan_submission(submission, {ids.begin(), ids.end()});
        for (const auto& [id, vol] : set.volumes) table.emplace(id, embed_volume(vol));
    } else {
        const Manifest manifest = parse_manifest(fs::path(dataset) / "manifest.csv");
        for (const std::string& id : manifest.sample_ids(split_from_string(split_name)))
            table.emplace(id,
                          embed_volume(load_volume(manifest.root / manifest.find(id)->oct_dir)));
    }
    save_embeddings(table, out_path);
    return 0;
}

int run_evaluate(const std::string& dataset, const std::string& split_name,
                 const std::string& submission, const std::string& out_path,
                 const RunConfig& cfg) {
    const Manifest manifest = parse_manifest(fs::path(dataset) / "manifest.csv");
    EvalConfig ec;
    ec.ssim = cfg.ssim;
    ec.pred_embeddings = cfg.pred_embeddings;
    ec.gt_embeddings = cfg.gt_embeddings;
    try {
        const MetricReport report =
            evaluate(manifest, split_from_string(split_name), submission, ec);
        write_text(report_to_json(report) + "\n", out_path);
        return 0;
    } catch (const IncompleteSubmissionError& e) {
        std::cerr << "invalid submission:\n";
        for (const auto& d : e.defects) std::cerr << "  " << d << "\n";
        return 1;
    }
}

int run_rank(const std::vector<std::string>& report_files, const std::string& out_path) {
    std::vector<MetricReport> reports;
    for (const auto& f : report_files) reports.push_back(report_from_json_file(f));
    write_text(leaderboard_to_csv(rank(reports)), out_path);
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"fundus-to-3D-OCT benchmark harness"};
    app.require_subcommand(1);

    std::string dataset, split_name = "final_test", submission, input, output, op, config_path;
    std::string fundus_path, oct_dir;
    std::vector<std::string> report_files;
    int threads = 0, direction = 0;
    bool flip = false, photometric = false;
    std::uint64_t photo_seed = 0;
    CorruptionSpec spec;
    std::string kind_name = "identity";

    app.add_option("--threads", threads, "worker thread count (0 = library default)");

    auto* validate = app.add_subcommand("validate", "check a submission for completeness");
    validate->add_option("--dataset", dataset)->required();
    validate->add_option("--split", split_name);
    validate->add_option("--submission", submission)->required();

    auto* preprocess = app.add_subcommand("preprocess", "run one preprocessing op on an image");
    preprocess->add_option("--op", op,
                           "crop-border|mask-roi|orient|remove-ruler|truncate|sequences")
        ->required();
    preprocess->add_option("--input", input)->required();
    preprocess->add_option("--out", output)->required();
    preprocess->add_option("--direction", direction, "scan direction 0..5 (orient)");
    preprocess->add_option("--config", config_path, "JSON run config");

    auto* augment = app.add_subcommand("augment", "collaborative flip / photometric augment");
    augment->add_option("--fundus", fundus_path)->required();
    augment->add_option("--oct", oct_dir)->required();
    augment->add_option("--out", output)->required();
    augment->add_flag("--flip", flip);
    augment->add_option("--photometric-seed", photo_seed)->each([&](const std::string&) {
        photometric = true;
    });

    auto* corrupt = app.add_subcommand("corrupt", "generate a baseline submission");
    corrupt->add_option("--dataset", dataset)->required();
    corrupt->add_option("--split", split_name);
    corrupt->add_option("--kind", kind_name, "gaussian_noise|random_crop|identity");
    corrupt->add_option("--steps", spec.steps);
    corrupt->add_option("--scale-lo", spec.scale_lo);
    corrupt->add_option("--scale-hi", spec.scale_hi);
    corrupt->add_option("--seed", spec.seed);
    corrupt->add_option("--out", output)->required();

    auto* embed = app.add_subcommand("embed", "write reference embeddings as CSV");
    embed->add_option("--dataset", dataset)->required();
    embed->add_option("--split", split_name);
    embed->add_option("--submission", submission, "embed a submission instead of ground truth");
    embed->add_option("--out", output)->required();

    auto* evaluate = app.add_subcommand("evaluate", "score a submission");
    evaluate->add_option("--dataset", dataset)->required();
    evaluate->add_option("--split", split_name);
    evaluate->add_option("--submission", submission)->required();
    evaluate->add_option("--out", output);
    evaluate->add_option("--config", config_path, "JSON run config");

    auto* rank_cmd = app.add_subcommand("rank", "build an FVD-primary leaderboard");
    rank_cmd->add_option("reports", report_files, "MetricReport JSON files")->required();
    rank_cmd->add_option("--out", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_threads(threads);

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_run_config(config_path);
        spec.kind = corruption_kind_from_string(kind_name);

        if (validate->parsed()) return run_validate(dataset, split_name, submission);
        if (preprocess->parsed()) return run_preprocess(op, input, output, cfg, direction);
        if (augment->parsed())
            return run_augment(fundus_path, oct_dir, output, flip, photo_seed, photometric);
        if (corrupt->parsed()) return run_corrupt(dataset, split_name, spec, output);
        if (embed->parsed()) return run_embed(dataset, split_name, submission, output);
        if (evaluate->parsed())
            return run_evaluate(dataset, split_name, submission, output, cfg);
        if (rank_cmd->parsed()) return run_rank(report_files, output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace octbench

#include "octbench/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "octbench/image_io.hpp"

namespace octbench {

namespace fs = std::filesystem;

Split split_from_string(const std::string& s) {
    if (s == "train") return Split::train;
    if (s == "prelim_test") return Split::prelim_test;
    if (s == "final_test") return Split::final_test;
    throw ParseError("unknown split: '" + s + "'");
}

std::string to_string(Split s) {
    switch (s) {
        case Split::train: return "train";
        case Split::prelim_test: return "prelim_test";
        case Split::final_test: return "final_test";
    }
    return "?";
}

const PairingRecord* Manifest::find(const std::string& sample_id) const {
    for (const auto& r : records)
        if (r.sample_id == sample_id) return &r;
    return nullptr;
}

std::vector<std::string> Manifest::sample_ids(Split split) const {
    std::vector<std::string> ids;
    for (const auto& r : records)
        if (r.split == split) ids.push_back(r.sample_id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::map<Split, std::size_t> Manifest::split_counts() const {
    std::map<Split, std::size_t> c;
    for (const auto& r : records) ++c[r.split];
    return c;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

void check_relative(const fs::path& p, const std::string& sample_id) {
    if (p.is_absolute())
        throw ParseError("absolute path in manifest for sample " + sample_id);
    for (const auto& part : p)
        if (part == "..")
            throw ParseError("parent traversal in manifest for sample " + sample_id);
}

}  // namespace

Manifest parse_manifest(const fs::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw FileNotFoundError("cannot open manifest: " + csv_path.string());

    std::string header;
    if (!std::getline(in, header)) throw EmptyManifestError("empty manifest file");
    const auto cols = split_csv_line(header);
    const std::vector<std::string> expected = {"sample_id", "patient_id", "fundus_path",
                                               "oct_dir", "split"};
    for (const auto& c : expected)
        if (std::find(cols.begin(), cols.end(), c) == cols.end())
            throw MissingColumnError("manifest missing column: " + c);
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;

    Manifest m;
    m.root = csv_path.parent_path();
    std::unordered_set<std::string> seen_ids;
    std::unordered_map<std::string, Split> patient_split;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() < cols.size()) throw ParseError("short manifest row: " + line);
        PairingRecord r;
        r.sample_id = f[idx["sample_id"]];
        r.patient_id = f[idx["patient_id"]];
        r.fundus_path = f[idx["fundus_path"]];
        r.oct_dir = f[idx["oct_dir"]];
        r.split = split_from_string(f[idx["split"]]);
        if (r.sample_id.empty() || r.patient_id.empty())
            throw ParseError("empty sample/patient id in manifest row: " + line);
        check_relative(r.fundus_path, r.sample_id);
        check_relative(r.oct_dir, r.sample_id);
        if (!seen_ids.insert(r.sample_id).second)
            throw DuplicateSampleIdError("duplicate sample_id: " + r.sample_id);
        auto it = patient_split.find(r.patient_id);
        if (it == patient_split.end()) {
            patient_split.emplace(r.patient_id, r.split);
        } else if (it->second != r.split) {
            throw SplitLeakError("patient " + r.patient_id + " appears in both " +
                                 to_string(it->second) + " and " + to_string(r.split));
        }
        m.records.push_back(std::move(r));
    }
    if (m.records.empty()) throw EmptyManifestError("manifest has no data rows");
    return m;
}

namespace {

// Locates frame k of a volume directory: k.png preferred, k.jpg fallback.
std::optional<fs::path> frame_path(const fs::path& dir, int k) {
    const fs::path png = dir / (std::to_string(k) + ".png");
    if (fs::exists(png)) return png;
    const fs::path jpg = dir / (std::to_string(k) + ".jpg");
    if (fs::exists(jpg)) return jpg;
    return std::nullopt;
}

}  // namespace

OctVolume load_volume(const fs::path& oct_dir) {
    std::vector<Frame> frames;
    frames.reserve(OctVolume::kFrameCount);
    for (int k = 0; k < OctVolume::kFrameCount; ++k) {
        const auto p = frame_path(oct_dir, k);
        if (!p)
            throw MissingFrameError("missing frame " + std::to_string(k) + " in " +
                                        oct_dir.string(),
                                    k);
        frames.push_back(load_frame(*p));
        if (frames.back().width != frames[0].width || frames.back().height != frames[0].height)
            throw DimMismatchError("frame " + std::to_string(k) + " dims differ in " +
                                   oct_dir.string());
    }
    return OctVolume(std::move(frames));
}

PairedSample load_sample(const Manifest& manifest, const std::string& sample_id) {
    const PairingRecord* r = manifest.find(sample_id);
    if (!r) throw UnknownSampleError("unknown sample: " + sample_id);
    PairedSample s;
    s.sample_id = r->sample_id;
    s.patient_id = r->patient_id;
    s.fundus = load_fundus(manifest.root / r->fundus_path);
    s.volume = load_volume(manifest.root / r->oct_dir);
    return s;
}

SubmissionSet scan_submission(const fs::path& dir, const std::set<std::string>& expected_ids) {
    SubmissionSet set;
    set.submission_id = dir.filename().string();
    std::vector<std::string> defects;

    for (const std::string& id : expected_ids) {
        const fs::path sdir = dir / id;
        if (!fs::is_directory(sdir)) {
            defects.push_back(id + ": missing sample directory");
            continue;
        }
        bool complete = true;
        for (int k = 0; k < OctVolume::kFrameCount; ++k) {
            if (!frame_path(sdir, k)) {
                defects.push_back(id + ": missing frame " + std::to_string(k));
                complete = false;
            }
        }
        if (!complete) continue;
        try {
            set.volumes.emplace(id, load_volume(sdir));
        } catch (const Error& e) {
            defects.push_back(id + ": " + e.what());
        }
    }

    if (fs::is_directory(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_directory()) continue;
            const std::string name = entry.path().filename().string();
            if (!expected_ids.count(name))
                set.warnings.push_back("extra sample ignored: " + name);
        }
    } else {
        defects.insert(defects.begin(), "submission directory does not exist");
    }

    if (!defects.empty())
        throw IncompleteSubmissionError("incomplete submission (" +
                                            std::to_string(defects.size()) + " defects)",
                                        std::move(defects));
    return set;
}

}  // namespace octbench

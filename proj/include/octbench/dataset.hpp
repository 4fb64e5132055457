#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "octbench/image.hpp"

namespace octbench {

enum class Split { train, prelim_test, final_test };

Split split_from_string(const std::string& s);
std::string to_string(Split s);

struct PairingRecord {
    std::string sample_id;
    std::string patient_id;
    std::filesystem::path fundus_path;  // relative to root
    std::filesystem::path oct_dir;      // relative to root
    Split split = Split::train;
};

struct Manifest {
    std::vector<PairingRecord> records;
    std::filesystem::path root;

    const PairingRecord* find(const std::string& sample_id) const;
    std::vector<std::string> sample_ids(Split split) const;
    std::map<Split, std::size_t> split_counts() const;
};

struct PairedSample {
    std::string sample_id;
    std::string patient_id;
    FundusImage fundus;
    OctVolume volume;
};

struct SubmissionSet {
    std::string submission_id;
    std::map<std::string, OctVolume> volumes;      // sample_id -> volume
    std::vector<std::string> warnings;             // e.g. extra samples
};

// Parses `<root>/manifest.csv`-style CSV with header
// sample_id,patient_id,fundus_path,oct_dir,split.
// Enforces unique sample ids and the patient-level split disjointness.
Manifest parse_manifest(const std::filesystem::path& csv_path);

// Loads the fundus image and the six OCT frames (0..5, .png preferred over .jpg).
PairedSample load_sample(const Manifest& manifest, const std::string& sample_id);

// Loads only the OCT volume of a sample.
OctVolume load_volume(const std::filesystem::path& oct_dir);

// Validates a submission directory against the expected sample ids. Throws
// IncompleteSubmissionError listing every defect; unknown ids become warnings.
struct IncompleteSubmissionError : Error {
    std::vector<std::string> defects;
    IncompleteSubmissionError(const std::string& msg, std::vector<std::string> d)
        : Error(msg), defects(std::move(d)) {}
};

SubmissionSet scan_submission(const std::filesystem::path& dir,
                              const std::set<std::string>& expected_ids);

}  // namespace octbench

#pragma once

#include "screenkit/errors.hpp"
#include "screenkit/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace screenkit {

enum class Laterality { Left, Right };
enum class Projection { CC, MLO };

// One of the four standard screening views (laterality x projection).
struct ViewId {
    Laterality laterality = Laterality::Left;
    Projection projection = Projection::CC;

    friend bool operator==(const ViewId&, const ViewId&) = default;
};

inline constexpr ViewId kAllViews[4] = {
    {Laterality::Left, Projection::CC},
    {Laterality::Left, Projection::MLO},
    {Laterality::Right, Projection::CC},
    {Laterality::Right, Projection::MLO},
};

std::string view_name(const ViewId& view);       // "L-CC", "R-MLO", ...
ViewId parse_view(const std::string& name);      // throws std::invalid_argument
std::string side_name(Laterality side);          // "left" / "right"
Laterality parse_side(const std::string& name);  // throws std::invalid_argument

enum class LesionClass { Benign, Malignant };
std::string class_name(LesionClass cls);  // "benign" / "malignant"
LesionClass parse_class(const std::string& name);

struct ImageRecord {
    std::string image_id;
    std::string exam_id;
    ViewId view;
    ImageSize size;

    friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

struct LesionAnnotation {
    std::string image_id;
    BoundingBox box;
    LesionClass lesion_class = LesionClass::Benign;

    friend bool operator==(const LesionAnnotation&, const LesionAnnotation&) = default;
};

// Per-breast ground truth; both flags may be set at once.
struct BreastLabel {
    bool has_malignant = false;
    bool has_benign = false;

    bool any() const { return has_malignant || has_benign; }

    friend bool operator==(const BreastLabel&, const BreastLabel&) = default;
};

struct ExamRecord {
    std::string exam_id;
    std::string patient_id;
    bool biopsied = false;
    BreastLabel left_label;
    BreastLabel right_label;
    std::vector<ImageRecord> images;  // up to four, at most one per view

    const BreastLabel& label(Laterality side) const {
        return side == Laterality::Left ? left_label : right_label;
    }
    const ImageRecord* image(const ViewId& view) const;  // nullptr when the view is absent

    friend bool operator==(const ExamRecord&, const ExamRecord&) = default;
};

struct CorpusSummary {
    std::int64_t n_exams = 0;
    std::int64_t n_images = 0;
    std::int64_t n_patients = 0;
    std::int64_t n_biopsy_exams = 0;
    std::int64_t n_malignant_breasts = 0;  // breasts counted per exam, not per patient
    std::int64_t n_benign_breasts = 0;
    std::int64_t n_both_breasts = 0;

    friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

// Immutable, validated collection of exams and lesion annotations.
// Construction enforces: unique exam and image ids, at most one image per
// view, valid image sizes, all-false labels on non-biopsied exams, and
// annotation boxes that lie inside their referenced image.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<ExamRecord> exams, std::vector<LesionAnnotation> annotations);

    const std::vector<ExamRecord>& exams() const { return exams_; }
    const std::vector<LesionAnnotation>& annotations() const { return annotations_; }

    const ExamRecord* find_exam(const std::string& exam_id) const;
    const ImageRecord* find_image(const std::string& image_id) const;
    std::size_t image_count() const { return image_index_.size(); }

    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.exams_ == b.exams_ && a.annotations_ == b.annotations_;
    }

private:
    std::vector<ExamRecord> exams_;
    std::vector<LesionAnnotation> annotations_;
    std::unordered_map<std::string, std::size_t> exam_index_;
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> image_index_;
};

// Exact counts over the corpus; a breast with both findings contributes to
// the malignant, benign, and both tallies.
CorpusSummary summarize(const Corpus& corpus);

// True iff the side has a malignant finding; benign-only breasts are
// negatives for the malignancy task.
bool breast_ground_truth(const ExamRecord& exam, Laterality side);

struct LoadOptions {
    bool strict = false;                           // unknown fields become errors
    std::vector<std::string>* warnings = nullptr;  // collect instead of printing to stderr
};

// Reads corpus JSONL (one "exam" or "annotation" object per line). Throws
// ParseError with file:line on malformed records and IntegrityError on
// cross-record violations.
Corpus load_corpus(const std::filesystem::path& path, const LoadOptions& options = {});

// Writes corpus JSONL with fixed field order: exams first, then annotations.
// load_corpus(save_corpus(c)) reproduces c field-for-field.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace screenkit

#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/frame.hpp"
#include "scmine/html_text.hpp"
#include "scmine/image_io.hpp"

namespace scmine {

enum class VideoKind {
    dev_screencast,
    non_dev_screencast,
    non_screencast,
    other,
    unknown,
};

inline std::string to_string(VideoKind k) {
    switch (k) {
        case VideoKind::dev_screencast: return "dev-screencast";
        case VideoKind::non_dev_screencast: return "non-dev-screencast";
        case VideoKind::non_screencast: return "non-screencast";
        case VideoKind::other: return "other";
        case VideoKind::unknown: return "unknown";
    }
    return "unknown";
}

inline VideoKind video_kind_from_string(const std::string& s) {
    if (s == "dev-screencast") return VideoKind::dev_screencast;
    if (s == "non-dev-screencast") return VideoKind::non_dev_screencast;
    if (s == "non-screencast") return VideoKind::non_screencast;
    if (s == "other") return VideoKind::other;
    if (s == "unknown") return VideoKind::unknown;
    throw parse_error("unknown video kind: " + s);
}

struct VideoRecord {
    std::string id;
    VideoKind kind = VideoKind::unknown;
    std::filesystem::path frame_dir;
    std::string title;
    std::optional<std::filesystem::path> transcript_path;

    bool operator==(const VideoRecord&) const = default;
};

enum class DocumentKind { title, transcript, api_doc };

struct Document {
    std::string id;
    DocumentKind kind = DocumentKind::transcript;
    std::string raw_text;
    std::vector<std::string> tokens; // filled by preprocessing
};

/// Parses a line-delimited JSON manifest, one VideoRecord per line, order
/// preserved. Duplicate ids and missing frame directories are rejected.
inline std::vector<VideoRecord> load_video_manifest(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open manifest: " + path.string());

    std::vector<VideoRecord> records;
    std::unordered_set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error("manifest line " + std::to_string(lineno) +
                              ": " + e.what());
        }
        VideoRecord rec;
        try {
            rec.id = j.at("id").get<std::string>();
            rec.kind = video_kind_from_string(j.at("kind").get<std::string>());
            rec.frame_dir = j.at("frame_dir").get<std::string>();
            rec.title = j.value("title", std::string{});
            if (j.contains("transcript_path") && !j["transcript_path"].is_null())
                rec.transcript_path = j["transcript_path"].get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw parse_error("manifest line " + std::to_string(lineno) +
                              ": " + e.what());
        }
        if (!seen.insert(rec.id).second)
            throw validation_error("duplicate video id in manifest: " + rec.id);
        if (!std::filesystem::is_directory(rec.frame_dir))
            throw validation_error("frame_dir does not exist for video " +
                                   rec.id + ": " + rec.frame_dir.string());
        records.push_back(std::move(rec));
    }
    return records;
}

inline nlohmann::ordered_json to_json(const VideoRecord& rec) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["kind"] = to_string(rec.kind);
    j["frame_dir"] = rec.frame_dir.string();
    j["title"] = rec.title;
    j["transcript_path"] =
        rec.transcript_path ? nlohmann::ordered_json(rec.transcript_path->string())
                            : nlohmann::ordered_json(nullptr);
    return j;
}

namespace detail {

// Pure timing / cue bookkeeping lines of a .vtt-style caption file.
inline bool is_caption_metadata_line(const std::string& line) {
    static const std::regex cue_number(R"(^\s*\d+\s*$)");
    static const std::regex timing(
        R"(^\s*[\d:.,]+\s*-->\s*[\d:.,]+.*$)");
    static const std::regex header(R"(^\s*WEBVTT.*$)");
    return std::regex_match(line, cue_number) ||
           std::regex_match(line, timing) || std::regex_match(line, header) ||
           line.rfind("NOTE", 0) == 0;
}

inline std::string collapse_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            if (!out.empty() && out.back() != ' ') out += ' ';
        } else {
            out += static_cast<char>(c);
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

} // namespace detail

/// Loads a plain-text or timed-caption transcript. Caption timing lines
/// are stripped; spoken lines are joined with single spaces.
inline Document load_transcript(const std::filesystem::path& path,
                                const std::string& id = "") {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open transcript: " + path.string());
    std::ostringstream joined;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::is_caption_metadata_line(line)) continue;
        joined << line << ' ';
    }
    Document doc;
    doc.id = id.empty() ? path.stem().string() : id;
    doc.kind = DocumentKind::transcript;
    doc.raw_text = detail::collapse_spaces(joined.str());
    if (doc.raw_text.empty())
        throw empty_document_error("transcript has no spoken text: " +
                                   path.string());
    return doc;
}

/// Extracts the visible text of an API reference page. Markup, script and
/// style content are removed; code identifiers keep their original casing.
inline Document extract_api_doc_text(const std::string& html,
                                     const std::string& id) {
    Document doc;
    doc.id = id;
    doc.kind = DocumentKind::api_doc;
    doc.raw_text = html_visible_text(html);
    if (doc.raw_text.empty())
        throw empty_document_error("API page has no visible text: " + id);
    return doc;
}

inline Document load_api_doc(const std::filesystem::path& path,
                             const std::string& id = "") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open API doc: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return extract_api_doc_text(buf.str(),
                                id.empty() ? path.stem().string() : id);
}

/// Samples frames from a directory of `<seconds>.ppm|png` files: for each
/// interval boundary 0, i, 2i, ... the frame with the smallest timestamp at
/// or after the boundary is selected (each frame at most once), then
/// quantized to a color bag.
inline FrameSequence load_frames(const std::filesystem::path& dir,
                                 double interval, int bits_per_channel = 4,
                                 const std::string& video_id = "") {
    if (interval <= 0)
        throw validation_error("load_frames: interval must be > 0");
    if (!std::filesystem::is_directory(dir))
        throw io_error("frame directory does not exist: " + dir.string());

    static const std::regex frame_name(R"((\d+)\.(ppm|png))");
    std::vector<std::pair<long, std::filesystem::path>> stamped;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::smatch m;
        const std::string name = entry.path().filename().string();
        if (std::regex_match(name, m, frame_name))
            stamped.emplace_back(std::stol(m[1].str()), entry.path());
    }
    std::sort(stamped.begin(), stamped.end());

    FrameSequence seq;
    seq.video_id = video_id.empty() ? dir.filename().string() : video_id;
    std::size_t cursor = 0;
    std::size_t last_taken = static_cast<std::size_t>(-1);
    if (!stamped.empty()) {
        const double max_ts = static_cast<double>(stamped.back().first);
        for (double boundary = 0.0; boundary <= max_ts; boundary += interval) {
            while (cursor < stamped.size() &&
                   static_cast<double>(stamped[cursor].first) < boundary)
                ++cursor;
            if (cursor >= stamped.size()) break;
            if (cursor == last_taken) continue;
            last_taken = cursor;
            const auto& [ts, path] = stamped[cursor];
            seq.frames.push_back(
                {static_cast<double>(ts),
                 quantize_frame(load_image(path.string()), bits_per_channel)});
        }
    }
    if (seq.frames.size() < 2)
        throw insufficient_frames_error(
            "need at least 2 sampled frames in " + dir.string() + " (got " +
            std::to_string(seq.frames.size()) + ")");
    return seq;
}

} // namespace scmine

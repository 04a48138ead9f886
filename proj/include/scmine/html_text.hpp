#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

namespace scmine {
namespace detail {

inline std::string lower_ascii(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

// Tags whose removal should break the text flow. Inline markup (<b>,
// <code>, <a>, ...) is removed without inserting a space so that code
// signatures split across tags stay contiguous.
inline bool is_block_tag(const std::string& name) {
    static const std::unordered_set<std::string> block{
        "p",  "div", "br", "hr", "li", "ul", "ol", "dl", "dt", "dd",
        "tr", "td",  "th", "table", "thead", "tbody", "caption",
        "h1", "h2",  "h3", "h4", "h5", "h6", "pre", "blockquote",
        "section", "article", "header", "footer", "nav", "body", "html",
        "head", "title", "form"};
    return block.count(name) != 0;
}

inline std::string decode_entity(const std::string& entity) {
    if (entity == "amp") return "&";
    // Angle brackets become spaces so no markup delimiter survives in the
    // extracted text (generics render as "List String").
    if (entity == "lt") return " ";
    if (entity == "gt") return " ";
    if (entity == "quot") return "\"";
    if (entity == "apos" || entity == "#39") return "'";
    if (entity == "nbsp" || entity == "#160") return " ";
    if (entity.size() > 1 && entity[0] == '#') {
        int code = 0;
        try {
            code = std::stoi(entity.substr(1));
        } catch (...) {
            return "";
        }
        if (code > 0 && code < 128) return std::string(1, static_cast<char>(code));
        return " ";
    }
    return " ";
}

} // namespace detail

/// Strips markup from an HTML page and returns the visible text with
/// whitespace collapsed. Script and style content is dropped entirely;
/// text inside code markup is preserved verbatim (original casing).
inline std::string html_visible_text(const std::string& html) {
    std::string out;
    out.reserve(html.size());
    std::size_t i = 0;
    const std::size_t n = html.size();
    std::string skip_until_close; // inside <script>/<style>

    auto append_space = [&out]() {
        if (!out.empty() && out.back() != ' ') out += ' ';
    };

    while (i < n) {
        const char c = html[i];
        if (c == '<') {
            // <!-- comments -->
            if (html.compare(i, 4, "<!--") == 0) {
                const auto end = html.find("-->", i + 4);
                i = end == std::string::npos ? n : end + 3;
                continue;
            }
            const auto close = html.find('>', i);
            if (close == std::string::npos) break;
            std::string tag = html.substr(i + 1, close - i - 1);
            const bool closing = !tag.empty() && tag[0] == '/';
            if (closing) tag.erase(0, 1);
            const auto name_end = tag.find_first_of(" \t\r\n/");
            const std::string name =
                detail::lower_ascii(tag.substr(0, name_end));
            if (!skip_until_close.empty()) {
                if (closing && name == skip_until_close)
                    skip_until_close.clear();
            } else if (!closing && (name == "script" || name == "style")) {
                skip_until_close = name;
            } else if (detail::is_block_tag(name)) {
                append_space();
            }
            i = close + 1;
            continue;
        }
        if (!skip_until_close.empty()) {
            ++i;
            continue;
        }
        if (c == '&') {
            const auto semi = html.find(';', i);
            if (semi != std::string::npos && semi - i <= 8) {
                const std::string decoded =
                    detail::decode_entity(html.substr(i + 1, semi - i - 1));
                if (decoded == " ")
                    append_space();
                else
                    out += decoded;
                i = semi + 1;
                continue;
            }
        }
        if (std::isspace(static_cast<unsigned char>(c)))
            append_space();
        else
            out += c;
        ++i;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

} // namespace scmine

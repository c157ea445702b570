#ifndef SLAM_SRC_LINE_READER_HPP_
#define SLAM_SRC_LINE_READER_HPP_

#include <algorithm>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace slam::detail {

/// Walks the significant lines of a text input: skips blank lines and '#'
/// comments, strips a trailing '\r', and tracks 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next() {
        while (std::getline(in_, line_)) {
            ++line_no_;
            if (!line_.empty() && line_.back() == '\r') line_.pop_back();
            if (line_.empty() || line_.front() == '#') continue;
            if (std::all_of(line_.begin(), line_.end(),
                            [](char c) { return c == ' ' || c == '\t'; }))
                continue;
            return true;
        }
        return false;
    }

    const std::string& line() const noexcept { return line_; }
    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t line_no_ = 0;
};

inline std::vector<std::string_view> split_tabs(std::string_view s) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto tab = s.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(s.substr(pos));
            return fields;
        }
        fields.push_back(s.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

}  // namespace slam::detail

#endif  // SLAM_SRC_LINE_READER_HPP_

#ifndef SLAM_LEXEME_HPP_
#define SLAM_LEXEME_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace slam {

/**
 * A POS-qualified lexeme label of the form "<CAT>.<lemma>", e.g. "V.peler"
 * or "N.pomme". The category is everything before the first '.'; category
 * and lemma must both be non-empty. Labels are kept verbatim (no case or
 * diacritic folding) and compare byte-wise.
 */
class Lexeme {
public:
    /// Validates and wraps a label. Throws std::invalid_argument.
    static Lexeme parse(std::string_view label);

    const std::string& label() const noexcept { return label_; }
    std::string_view category() const noexcept {
        return std::string_view(label_).substr(0, dot_);
    }
    std::string_view lemma() const noexcept {
        return std::string_view(label_).substr(dot_ + 1);
    }

    friend bool operator==(const Lexeme& a, const Lexeme& b) noexcept {
        return a.label_ == b.label_;
    }
    friend std::strong_ordering operator<=>(const Lexeme& a, const Lexeme& b) noexcept {
        return a.label_ <=> b.label_;
    }

private:
    Lexeme(std::string label, std::size_t dot) : label_(std::move(label)), dot_(dot) {}

    std::string label_;
    std::size_t dot_;  // position of the category separator
};

}  // namespace slam

template <>
struct std::hash<slam::Lexeme> {
    std::size_t operator()(const slam::Lexeme& l) const noexcept {
        return std::hash<std::string>()(l.label());
    }
};

#endif  // SLAM_LEXEME_HPP_

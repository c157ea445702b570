#include "slam/lexeme.hpp"

#include <stdexcept>

namespace slam {

Lexeme Lexeme::parse(std::string_view label) {
    const auto dot = label.find('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == label.size())
        throw std::invalid_argument("malformed lexeme label \"" + std::string(label) +
                                    "\" (expected <CAT>.<lemma>)");
    return Lexeme(std::string(label), dot);
}

}  // namespace slam

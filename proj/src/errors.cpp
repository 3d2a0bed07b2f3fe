#include "cohomo/errors.hpp"

namespace cohomo {

namespace {

std::string describe_parse_error(const std::string& message, std::size_t position,
                                 const std::vector<std::string>& expected)
{
    std::string text = "position " + std::to_string(position) + ": " + message;
    if (!expected.empty()) {
        text += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i != 0) {
                text += i + 1 == expected.size() ? " or " : ", ";
            }
            text += expected[i];
        }
        text += ")";
    }
    return text;
}

} // namespace

ParseError::ParseError(std::string message, std::size_t position, std::vector<std::string> expected)
    : Error(describe_parse_error(message, position, expected)), position_(position),
      expected_(std::move(expected))
{
}

UnknownIdentifierError::UnknownIdentifierError(const std::string& name, std::size_t position)
    : ParseError("unknown identifier '" + name + "'", position)
{
}

} // namespace cohomo

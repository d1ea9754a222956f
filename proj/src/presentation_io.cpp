#include "tetra/presentation_io.hpp"

namespace tetra::io_detail {

std::vector<Token> tokenize(const std::string& s, int line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            t.kind = Token::name;
            t.text = s.substr(i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.kind = Token::number;
            t.text = s.substr(i, j - i);
            i = j;
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '(' || c == ')' ||
                   c == '^') {
            t.kind = Token::sym;
            t.text = std::string(1, c);
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, t.col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::end;
    end.col = static_cast<int>(s.size()) + 1;
    out.push_back(end);
    return out;
}

} // namespace tetra::io_detail

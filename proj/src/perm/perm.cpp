#include "permlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

bool is_bijection(const std::vector<int>& letters)
{
    std::vector<bool> seen(letters.size() + 1, false);
    for (int v : letters) {
        if (v < 1 || v > static_cast<int>(letters.size()) || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters))
{
    if (!is_bijection(letters_)) {
        std::ostringstream msg;
        msg << "not a permutation of 1..n:";
        for (int v : letters_) {
            msg << ' ' << v;
        }
        throw DomainError(msg.str());
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> letters(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) {
        letters[i] = i + 1;
    }
    return Permutation(std::move(letters));
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            current.push_back(c);
        } else {
            throw DomainError("unexpected character '" + std::string(1, c) + "' in permutation \"" +
                              std::string(text) + "\"");
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    std::vector<int> letters;
    if (tokens.size() == 1 && tokens.front().size() > 1) {
        for (char c : tokens.front()) {
            letters.push_back(c - '0');
        }
    } else {
        for (const auto& tok : tokens) {
            if (tok.size() > 6) {
                throw DomainError("letter out of range: " + tok);
            }
            letters.push_back(std::stoi(tok));
        }
    }
    return Permutation(std::move(letters));
}

Permutation Permutation::reversed() const
{
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    return Permutation(std::move(out));
}

Permutation Permutation::complemented() const
{
    std::vector<int> out(letters_);
    const int n = size();
    for (int& v : out) {
        v = n + 1 - v;
    }
    return Permutation(std::move(out));
}

std::string Permutation::str() const
{
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out += std::to_string(letters_[i]);
    }
    return out;
}

Pattern::Pattern(Permutation perm) : perm_(std::move(perm))
{
    if (perm_.size() != 3 && perm_.size() != 4) {
        throw DomainError("patterns must have length 3 or 4, got \"" + perm_.str() + "\"");
    }
}

Pattern Pattern::parse(std::string_view text) { return Pattern(Permutation::parse(text)); }

std::string Pattern::str() const
{
    std::string out;
    for (int v : perm_.letters()) {
        out += std::to_string(v);
    }
    return out;
}

PatternPair::PatternPair(Pattern first, Pattern second) : first_(std::move(first)), second_(std::move(second))
{
    if (first_.size() != second_.size()) {
        throw DomainError("patterns of a pair must have equal length: " + str());
    }
    if (first_ == second_) {
        throw DomainError("patterns of a pair must be distinct: " + str());
    }
}

PatternPair PatternPair::parse(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw DomainError("pattern pair must look like \"1243,1423\", got \"" + std::string(text) + "\"");
    }
    return PatternPair(Pattern::parse(text.substr(0, comma)), Pattern::parse(text.substr(comma + 1)));
}

PatternPair PatternPair::canonical() const
{
    if (second_ < first_) {
        return PatternPair(second_, first_);
    }
    return *this;
}

std::string PatternPair::str() const { return first_.str() + "," + second_.str(); }

std::vector<LrMinimum> left_right_minima(std::span<const int> perm)
{
    std::vector<LrMinimum> out;
    int smallest = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (out.empty() || perm[i] < smallest) {
            smallest = perm[i];
            out.push_back({static_cast<int>(i) + 1, perm[i]});
        }
    }
    return out;
}

}  // namespace permlab

#include "fdb/notation.hpp"

#include <cctype>
#include <charconv>

#include "fdb/errors.hpp"
#include "fdb/expansion.hpp"

namespace fdb {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_blank()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
    std::size_t position() const noexcept { return pos_; }
    void advance() noexcept { ++pos_; }

    void expect(char c)
    {
        if (peek() != c) {
            throw parse_error(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    unsigned positive_integer(const char* what)
    {
        const std::size_t start = pos_;
        unsigned value = 0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ptr == begin) {
            throw parse_error(std::string("expected ") + what, start);
        }
        if (ec != std::errc{}) {
            throw parse_error(std::string(what) + " out of range", start);
        }
        if (value == 0) {
            throw parse_error(std::string(what) + " must be >= 1", start);
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    // x<i> or x<i>^<k>
    void factor(Multiset& into)
    {
        expect('x');
        const unsigned id = positive_integer("variable index");
        unsigned power = 1;
        if (peek() == '^') {
            advance();
            power = positive_integer("exponent");
        }
        into.add(id, power);
    }

    // factors up to the end of input or a closing bracket
    Multiset factors(bool bracketed)
    {
        Multiset m;
        while (true) {
            const std::size_t before = pos_;
            skip_blank();
            if (at_end() || (bracketed && peek() == ']')) {
                return m;
            }
            if (!m.empty() && pos_ == before) {
                throw parse_error("factors must be separated by whitespace", pos_);
            }
            factor(m);
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void render_factors(const Multiset& m, std::string& out)
{
    bool first = true;
    for (const auto& [id, count] : m) {
        if (!first) {
            out += ' ';
        }
        first = false;
        out += 'x' + std::to_string(id);
        if (count > 1) {
            out += '^' + std::to_string(count);
        }
    }
}

} // namespace

Multiset parse_signature(std::string_view text)
{
    Scanner scanner(text);
    Multiset m = scanner.factors(false);
    if (!scanner.at_end()) {
        throw parse_error("unexpected character", scanner.position());
    }
    return m;
}

MultisetPartition parse_partition(std::string_view text)
{
    Scanner scanner(text);
    std::vector<Multiset> blocks;
    scanner.skip_blank();
    if (scanner.at_end()) {
        throw parse_error("expected '['", scanner.position());
    }
    while (!scanner.at_end()) {
        const std::size_t open = scanner.position();
        scanner.expect('[');
        Multiset block = scanner.factors(true);
        scanner.expect(']');
        if (block.empty()) {
            throw parse_error("empty block", open);
        }
        blocks.push_back(std::move(block));
        scanner.skip_blank();
    }
    return MultisetPartition::from_blocks(blocks);
}

std::string format_signature(const Multiset& m)
{
    std::string out;
    render_factors(m, out);
    return out;
}

std::string format_partition(const MultisetPartition& mp)
{
    std::string out;
    for (const auto& block : display_blocks(mp)) {
        out += '[';
        render_factors(block, out);
        out += ']';
    }
    return out;
}

} // namespace fdb

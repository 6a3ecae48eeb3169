#include "ethsee/selector.hpp"

#include <cctype>
#include <cstring>

#include "ethsee/bytes.hpp"
#include "ethsee/errors.hpp"
#include "ethsee/keccak.hpp"

namespace ethsee {

std::string FunctionSignature::canonical() const {
    std::string out = name;
    out.push_back('(');
    for (size_t i = 0; i < arg_types.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += arg_types[i];
    }
    out.push_back(')');
    return out;
}

Selector Selector::from_hex(std::string_view hex) {
    Bytes raw = ::ethsee::from_hex(hex);
    if (raw.size() != 4) throw std::invalid_argument("selector must be 4 bytes");
    std::array<uint8_t, 4> bytes{};
    std::memcpy(bytes.data(), raw.data(), 4);
    return Selector(bytes);
}

uint32_t Selector::value() const {
    return static_cast<uint32_t>(bytes_[0]) << 24 | static_cast<uint32_t>(bytes_[1]) << 16 |
           static_cast<uint32_t>(bytes_[2]) << 8 | static_cast<uint32_t>(bytes_[3]);
}

std::string Selector::hex() const {
    return "0x" + to_hex(bytes_);
}

Selector compute_selector(std::string_view canonical_header) {
    Hash256 digest = keccak256(canonical_header);
    std::array<uint8_t, 4> bytes{};
    std::memcpy(bytes.data(), digest.data(), 4);
    return Selector(bytes);
}

Selector compute_selector(const FunctionSignature& sig) {
    return compute_selector(sig.canonical());
}

namespace {

bool is_space_char(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space_char(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space_char(s.back())) s.remove_suffix(1);
    return s;
}

bool is_type_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_type_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '[' || c == ']';
}

// Data-location and mutability keywords that ride along in Solidity headers.
bool is_arg_keyword(std::string_view word) {
    return word == "memory" || word == "calldata" || word == "storage" || word == "payable" ||
           word == "indexed" || word == "constant";
}

// Expands the elementary-type aliases; rejects aliases with no single
// canonical expansion.
std::string canonicalize_type(std::string_view type) {
    std::string_view base = type;
    std::string_view suffix;
    if (size_t bracket = type.find('['); bracket != std::string_view::npos) {
        base = type.substr(0, bracket);
        suffix = type.substr(bracket);
    }
    std::string out;
    if (base == "uint")
        out = "uint256";
    else if (base == "int")
        out = "int256";
    else if (base == "fixed" || base == "ufixed")
        throw ParseError("ambiguous alias type in signature: " + std::string(type));
    else
        out = std::string(base);
    out += suffix;
    return out;
}

std::string parse_arg(std::string_view arg) {
    arg = trim(arg);
    if (arg.empty()) throw ParseError("empty argument in signature");

    // Split into whitespace-separated words: type [keywords...] [name]
    std::vector<std::string_view> words;
    size_t i = 0;
    while (i < arg.size()) {
        while (i < arg.size() && is_space_char(arg[i])) ++i;
        size_t start = i;
        while (i < arg.size() && !is_space_char(arg[i])) ++i;
        if (i > start) words.push_back(arg.substr(start, i - start));
    }
    std::string_view type = words[0];
    if (type.empty() || !is_type_start(type[0]))
        throw ParseError("argument type must start with a letter: " + std::string(arg));
    for (char c : type)
        if (!is_type_char(c)) throw ParseError("invalid character in type: " + std::string(type));
    // Remaining words may only be location keywords plus at most one name.
    size_t names = 0;
    for (size_t w = 1; w < words.size(); ++w) {
        if (is_arg_keyword(words[w])) continue;
        if (++names > 1) throw ParseError("too many tokens in argument: " + std::string(arg));
    }
    return canonicalize_type(type);
}

}  // namespace

FunctionSignature normalize_signature(std::string_view raw) {
    std::string_view s = trim(raw);
    size_t open = s.find('(');
    if (open == std::string_view::npos) throw ParseError("signature has no parameter list");
    if (s.back() != ')') throw ParseError("signature does not end with ')'");

    std::string_view name = trim(s.substr(0, open));
    if (name.empty()) throw ParseError("signature has an empty name");
    for (char c : name)
        if (c == '(' || c == ')' || c == ',') throw ParseError("invalid character in name");
    // Inner whitespace would make the header ambiguous; leading/trailing was trimmed.
    for (char c : name)
        if (is_space_char(c)) throw ParseError("whitespace inside function name");

    std::string_view args = s.substr(open + 1, s.size() - open - 2);
    if (args.find('(') != std::string_view::npos || args.find(')') != std::string_view::npos)
        throw ParseError("unbalanced parentheses in signature");

    FunctionSignature sig;
    sig.name = std::string(name);
    if (!trim(args).empty()) {
        size_t start = 0;
        while (true) {
            size_t comma = args.find(',', start);
            std::string_view piece =
                comma == std::string_view::npos ? args.substr(start) : args.substr(start, comma - start);
            sig.arg_types.push_back(parse_arg(piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    if (sig.arg_types.size() > kMaxSignatureArity)
        throw ParseError("signature arity exceeds 16");
    return sig;
}

}  // namespace ethsee

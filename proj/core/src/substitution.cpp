#include "sadic/substitution.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace sadic {

Substitution::Substitution(std::string name, std::vector<RectPattern> images)
    : name_(std::move(name)), images_(std::move(images)) {
    if (name_.empty()) throw FormatError("substitution: empty name");
    if (images_.empty()) throw FormatError("substitution '" + name_ + "': no images");
}

const RectPattern& Substitution::image(Letter a) const {
    if (a.index < 0 || a.index >= letter_count()) {
        throw DomainError("substitution '" + name_ + "': letter index " + std::to_string(a.index) +
                          " outside its alphabet");
    }
    return images_[static_cast<std::size_t>(a.index)];
}

bool Substitution::uniform_support() const {
    for (const RectPattern& img : images_) {
        if (img.width() != images_.front().width() || img.height() != images_.front().height()) {
            return false;
        }
    }
    return true;
}

bool Substitution::non_degenerate() const {
    return std::all_of(images_.begin(), images_.end(),
                       [](const RectPattern& img) { return img.width() >= 2 && img.height() >= 2; });
}

int Substitution::min_extent() const {
    int m = std::numeric_limits<int>::max();
    for (const RectPattern& img : images_) m = std::min({m, img.width(), img.height()});
    return m;
}

int Substitution::max_image_width() const {
    int m = 0;
    for (const RectPattern& img : images_) m = std::max(m, img.width());
    return m;
}

int Substitution::max_image_height() const {
    int m = 0;
    for (const RectPattern& img : images_) m = std::max(m, img.height());
    return m;
}

SubstitutionSet::SubstitutionSet(Alphabet alphabet, std::vector<Substitution> members,
                                 bool require_non_degenerate)
    : alphabet_(std::move(alphabet)), members_(std::move(members)) {
    if (members_.empty()) throw FormatError("substitution set: no members");
    for (const Substitution& s : members_) {
        if (s.letter_count() != alphabet_.size()) {
            throw FormatError("substitution '" + s.name() + "': has " +
                              std::to_string(s.letter_count()) + " images for an alphabet of size " +
                              std::to_string(alphabet_.size()));
        }
        for (int a = 0; a < alphabet_.size(); ++a) {
            if (s.image(Letter{a}).max_letter_index() >= alphabet_.size()) {
                throw FormatError("substitution '" + s.name() + "': image of '" +
                                  std::string(1, alphabet_.glyph(Letter{a})) +
                                  "' uses a letter outside the alphabet");
            }
        }
        if (require_non_degenerate && !s.non_degenerate()) {
            throw FormatError("substitution '" + s.name() +
                              "': degenerate image (every extent must be at least 2)");
        }
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            if (members_[i].name() == members_[j].name()) {
                throw FormatError("substitution set: duplicate name '" + members_[i].name() + "'");
            }
        }
    }
}

const Substitution& SubstitutionSet::member(int i) const {
    if (i < 0 || i >= size()) throw DomainError("substitution index out of range");
    return members_[static_cast<std::size_t>(i)];
}

const Substitution& SubstitutionSet::by_name(std::string_view name) const {
    if (auto i = find(name)) return members_[static_cast<std::size_t>(*i)];
    throw DomainError("unknown substitution name '" + std::string(name) + "'");
}

std::optional<int> SubstitutionSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].name() == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

int SubstitutionSet::min_extent() const {
    int m = std::numeric_limits<int>::max();
    for (const Substitution& s : members_) m = std::min(m, s.min_extent());
    return m;
}

int SubstitutionSet::max_extent() const {
    int m = 0;
    for (const Substitution& s : members_) {
        m = std::max({m, s.max_image_width(), s.max_image_height()});
    }
    return m;
}

SubstitutionPattern::SubstitutionPattern(int width, int height, std::vector<int> entries)
    : width_(width), height_(height), entries_(std::move(entries)) {
    if (width < 1 || height < 1) throw DomainError("substitution pattern extents must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw DomainError("substitution pattern: entry count does not match shape");
    }
}

SubstitutionPattern SubstitutionPattern::constant(int member, int width, int height) {
    return SubstitutionPattern(
        width, height,
        std::vector<int>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), member));
}

SubstitutionPattern SubstitutionPattern::parse(const SubstitutionSet& set, std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> row;
    std::string tok;
    auto flush_token = [&] {
        if (tok.empty()) return;
        auto idx = set.find(tok);
        if (!idx) throw FormatError("substitution grid: unknown name '" + tok + "'");
        row.push_back(*idx);
        tok.clear();
    };
    for (char c : text) {
        if (c == '/' || c == '\n') {
            flush_token();
            rows.push_back(row);
            row.clear();
        } else if (c == ' ' || c == '\t') {
            flush_token();
        } else {
            tok.push_back(c);
        }
    }
    flush_token();
    if (!row.empty()) rows.push_back(row);
    if (rows.empty()) throw FormatError("substitution grid: no rows");
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    if (w == 0) throw FormatError("substitution grid: empty row");
    std::vector<int> entries(static_cast<std::size_t>(w) * h);
    for (int r = 0; r < h; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != w) {
            throw FormatError("substitution grid: ragged rows");
        }
        for (int x = 0; x < w; ++x) {
            // first text row is the top row
            entries[static_cast<std::size_t>(h - 1 - r) * w + x] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)];
        }
    }
    return SubstitutionPattern(w, h, std::move(entries));
}

std::string SubstitutionPattern::to_text(const SubstitutionSet& set) const {
    std::ostringstream out;
    for (int y = height_ - 1; y >= 0; --y) {
        for (int x = 0; x < width_; ++x) {
            if (x > 0) out << ' ';
            out << set.member(member_at(x, y)).name();
        }
        if (y > 0) out << " / ";
    }
    return out.str();
}

SequenceSpec::SequenceSpec(std::vector<int> prefix, std::vector<int> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw FormatError("sequence: period must be nonempty");
}

SequenceSpec SequenceSpec::parse(const SubstitutionSet& set, const std::vector<std::string>& prefix,
                                 const std::vector<std::string>& period) {
    auto resolve = [&](const std::vector<std::string>& names, const char* where) {
        std::vector<int> out;
        out.reserve(names.size());
        for (const std::string& n : names) {
            auto idx = set.find(n);
            if (!idx) {
                throw FormatError(std::string("sequence.") + where + ": unknown name '" + n + "'");
            }
            out.push_back(*idx);
        }
        return out;
    };
    return SequenceSpec(resolve(prefix, "prefix"), resolve(period, "period"));
}

int SequenceSpec::member_at(std::size_t n) const {
    if (rule_) return rule_(n);
    if (n < prefix_.size()) return prefix_[n];
    return period_[(n - prefix_.size()) % period_.size()];
}

AxisProfile::AxisProfile(int lo, std::vector<int> extents) : lo_(lo), extents_(std::move(extents)) {
    if (extents_.empty()) throw DomainError("axis profile: empty range");
    for (int e : extents_) {
        if (e < 1) throw DomainError("axis profile: extents must be >= 1");
    }
}

AxisProfile AxisProfile::constant(int extent, int lo, int hi) {
    if (hi <= lo) throw DomainError("axis profile: empty range");
    return AxisProfile(lo, std::vector<int>(static_cast<std::size_t>(hi - lo), extent));
}

int AxisProfile::extent(int r) const {
    if (r < lo_ || r >= hi()) {
        throw DomainError("axis profile: coordinate " + std::to_string(r) + " outside [" +
                          std::to_string(lo_) + ", " + std::to_string(hi()) + ")");
    }
    return extents_[static_cast<std::size_t>(r - lo_)];
}

int AxisProfile::total() const {
    int t = 0;
    for (int e : extents_) t += e;
    return t;
}

} // namespace sadic

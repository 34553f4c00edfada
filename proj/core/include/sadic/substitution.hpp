#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sadic/types.hpp"

namespace sadic {

/// A total map letter -> rectangular image. Image extents may depend on the
/// letter; that is what makes compatibility a real condition.
class Substitution {
public:
    Substitution(std::string name, std::vector<RectPattern> images);

    const std::string& name() const { return name_; }
    int letter_count() const { return static_cast<int>(images_.size()); }

    const RectPattern& image(Letter a) const;
    int image_width(Letter a) const { return image(a).width(); }
    int image_height(Letter a) const { return image(a).height(); }

    /// True when every letter has the same image extents.
    bool uniform_support() const;
    bool non_degenerate() const; // every image at least 2x2

    int min_extent() const; // over letters and both axes
    int max_image_width() const;
    int max_image_height() const;

private:
    std::string name_;
    std::vector<RectPattern> images_; // indexed by letter
};

/// Nonempty ordered collection of substitutions over one alphabet,
/// addressable by name or position.
class SubstitutionSet {
public:
    SubstitutionSet(Alphabet alphabet, std::vector<Substitution> members,
                    bool require_non_degenerate = true);

    const Alphabet& alphabet() const { return alphabet_; }
    int size() const { return static_cast<int>(members_.size()); }
    const Substitution& member(int i) const;
    const Substitution& by_name(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;

    int min_extent() const;
    int max_extent() const;

private:
    Alphabet alphabet_;
    std::vector<Substitution> members_;
};

/// Rectangular grid of substitution choices, one per cell of the pattern it
/// will be applied to. Entries are member indices of a SubstitutionSet.
class SubstitutionPattern {
public:
    SubstitutionPattern(int width, int height, std::vector<int> entries);

    static SubstitutionPattern constant(int member, int width, int height);
    /// Whitespace-separated names, rows top to bottom split on '/':
    /// "a a b a / c c d c".
    static SubstitutionPattern parse(const SubstitutionSet& set, std::string_view text);

    int width() const { return width_; }
    int height() const { return height_; }
    int member_at(int x, int y) const { return entries_[static_cast<std::size_t>(y) * width_ + x]; }

    std::string to_text(const SubstitutionSet& set) const;

    friend bool operator==(const SubstitutionPattern&, const SubstitutionPattern&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<int> entries_; // row-major, bottom row first
};

/// Infinite sequence of member indices: an explicit finite prefix followed by
/// a repeating period, or an arbitrary computable rule supplied by the host.
class SequenceSpec {
public:
    SequenceSpec(std::vector<int> prefix, std::vector<int> period);

    static SequenceSpec parse(const SubstitutionSet& set, const std::vector<std::string>& prefix,
                              const std::vector<std::string>& period);

    int member_at(std::size_t n) const;

    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& period() const { return period_; }

    /// Overrides prefix/period lookup entirely.
    void set_rule(std::function<int(std::size_t)> rule) { rule_ = std::move(rule); }
    bool has_rule() const { return static_cast<bool>(rule_); }

private:
    std::vector<int> prefix_;
    std::vector<int> period_;
    std::function<int(std::size_t)> rule_;
};

enum class Axis { horizontal, vertical };

/// Block extents along one axis over a contiguous coordinate range
/// [lo, lo + count).
class AxisProfile {
public:
    AxisProfile(int lo, std::vector<int> extents);

    static AxisProfile constant(int extent, int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(extents_.size()); }
    int extent(int r) const;
    int total() const;

private:
    int lo_ = 0;
    std::vector<int> extents_;
};

/// Per-axis extents of the image blocks of a compatible application; feeds
/// the grid map phi.
struct SizeProfile {
    AxisProfile horizontal;
    AxisProfile vertical;

    const AxisProfile& axis(Axis a) const {
        return a == Axis::horizontal ? horizontal : vertical;
    }
};

} // namespace sadic

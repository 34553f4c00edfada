#include "sadic/decoration.hpp"

namespace sadic {

namespace {

// Glyph pool for decorated alphabets; quoting-hazard characters left out.
const std::string kGlyphPool =
    "0123456789"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz"
    "!#$%&()*+,-.:;<=>?@[]^_{|}";

int decorated_size(const SubstitutionSet& set) {
    return set.alphabet().size() * set.size() * set.size();
}

Letter encode_impl(const SubstitutionSet& set, const DecoratedLetter& d) {
    const int s = set.size();
    if (d.base.index < 0 || d.base.index >= set.alphabet().size() || d.v_dec < 0 || d.v_dec >= s ||
        d.h_dec < 0 || d.h_dec >= s) {
        throw DomainError("decorated letter outside the decorated alphabet");
    }
    return Letter{(d.base.index * s + d.v_dec) * s + d.h_dec};
}

Substitution lift_member(const SubstitutionSet& set, int member) {
    const Substitution& s = set.member(member);
    const int n_members = set.size();
    std::vector<RectPattern> images;
    images.reserve(static_cast<std::size_t>(decorated_size(set)));
    for (int a = 0; a < set.alphabet().size(); ++a) {
        const RectPattern& img = s.image(Letter{a});
        for (int v = 0; v < n_members; ++v) {
            for (int h = 0; h < n_members; ++h) {
                RectPattern lifted(img.width(), img.height());
                for (int y = 0; y < img.height(); ++y) {
                    for (int x = 0; x < img.width(); ++x) {
                        const int v_dec = (x == img.width() - 1) ? v : member;
                        const int h_dec = (y == img.height() - 1) ? h : member;
                        lifted.set(x, y,
                                   encode_impl(set, DecoratedLetter{img.at(x, y), v_dec, h_dec}));
                    }
                }
                images.push_back(std::move(lifted));
            }
        }
    }
    return Substitution(s.name() + kLiftMarker, std::move(images));
}

} // namespace

DecoratedSystem::DecoratedSystem(SubstitutionSet base, SubstitutionSet lifted)
    : base_(std::move(base)), lifted_(std::move(lifted)) {}

DecoratedSystem DecoratedSystem::lift(const SubstitutionSet& base) {
    for (int m = 0; m < base.size(); ++m) {
        if (base.member(m).name().back() == kLiftMarker) {
            throw DomainError("lift: member '" + base.member(m).name() +
                              "' already carries the lift marker");
        }
    }
    const int n = decorated_size(base);
    if (n > static_cast<int>(kGlyphPool.size())) {
        throw DomainError("lift: decorated alphabet needs " + std::to_string(n) +
                          " glyphs, only " + std::to_string(kGlyphPool.size()) + " available");
    }
    Alphabet decorated(std::string_view(kGlyphPool).substr(0, static_cast<std::size_t>(n)));
    std::vector<Substitution> lifted_members;
    lifted_members.reserve(static_cast<std::size_t>(base.size()));
    for (int m = 0; m < base.size(); ++m) {
        lifted_members.push_back(lift_member(base, m));
    }
    const bool non_degenerate = base.min_extent() >= 2;
    return DecoratedSystem(base,
                           SubstitutionSet(std::move(decorated), std::move(lifted_members),
                                           non_degenerate));
}

Letter DecoratedSystem::encode(const DecoratedLetter& d) const { return encode_impl(base_, d); }

DecoratedLetter DecoratedSystem::decode(Letter lifted_letter) const {
    const int s = base_.size();
    int idx = lifted_letter.index;
    if (idx < 0 || idx >= decorated_size(base_)) {
        throw DomainError("decode: letter outside the decorated alphabet");
    }
    DecoratedLetter d;
    d.h_dec = idx % s;
    idx /= s;
    d.v_dec = idx % s;
    d.base = Letter{idx / s};
    return d;
}

RectPattern DecoratedSystem::project_base(const RectPattern& decorated) const {
    RectPattern out(decorated.width(), decorated.height());
    for (int y = 0; y < decorated.height(); ++y) {
        for (int x = 0; x < decorated.width(); ++x) {
            out.set(x, y, decode(decorated.at(x, y)).base);
        }
    }
    return out;
}

SubstitutionPattern DecoratedSystem::project_v(const RectPattern& decorated) const {
    std::vector<int> entries(static_cast<std::size_t>(decorated.width()) * decorated.height());
    for (int y = 0; y < decorated.height(); ++y) {
        for (int x = 0; x < decorated.width(); ++x) {
            entries[static_cast<std::size_t>(y) * decorated.width() + x] =
                decode(decorated.at(x, y)).v_dec;
        }
    }
    return SubstitutionPattern(decorated.width(), decorated.height(), std::move(entries));
}

SubstitutionPattern DecoratedSystem::project_h(const RectPattern& decorated) const {
    std::vector<int> entries(static_cast<std::size_t>(decorated.width()) * decorated.height());
    for (int y = 0; y < decorated.height(); ++y) {
        for (int x = 0; x < decorated.width(); ++x) {
            entries[static_cast<std::size_t>(y) * decorated.width() + x] =
                decode(decorated.at(x, y)).h_dec;
        }
    }
    return SubstitutionPattern(decorated.width(), decorated.height(), std::move(entries));
}

bool DecoratedSystem::sync_check(const RectPattern& decorated) const {
    // V decorations depend only on the column, H decorations only on the
    // row; lifted-sequence iterates satisfy both by construction.
    for (int y = 0; y < decorated.height(); ++y) {
        for (int x = 0; x < decorated.width(); ++x) {
            const DecoratedLetter here = decode(decorated.at(x, y));
            if (x + 1 < decorated.width() &&
                decode(decorated.at(x + 1, y)).h_dec != here.h_dec) {
                return false;
            }
            if (y + 1 < decorated.height() &&
                decode(decorated.at(x, y + 1)).v_dec != here.v_dec) {
                return false;
            }
        }
    }
    return true;
}

Substitution lift_substitution(const SubstitutionSet& set, std::string_view name) {
    auto idx = set.find(name);
    if (!idx) throw DomainError("lift_substitution: '" + std::string(name) + "' not in the set");
    return lift_member(set, *idx);
}

std::vector<std::string> history_word(const SubstitutionSet& set, const SequenceSpec& seq,
                                      int level, const DecoratedLetter& seed) {
    DecoratedSystem sys = DecoratedSystem::lift(set);
    RectPattern top = iterate(sys.lifted_set(), sys.lift_sequence(seq), level, sys.encode(seed));
    std::vector<std::string> word;
    word.reserve(static_cast<std::size_t>(top.width()));
    for (int x = 0; x < top.width(); ++x) {
        word.push_back(set.member(sys.decode(top.at(x, 0)).v_dec).name());
    }
    return word;
}

} // namespace sadic

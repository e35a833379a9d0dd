#include "mmq/carrier.hpp"

#include <stdexcept>

namespace mmq {

Carrier::Carrier(std::vector<std::vector<std::string>> classes)
    : classes_(std::move(classes))
{
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (classes_[c].empty())
            throw std::invalid_argument("skew class " + std::to_string(c) + " is empty");
        offset_.push_back(size_);
        ElementSet mask = 0;
        for (std::size_t s = 0; s < classes_[c].size(); ++s) {
            const std::string& l = classes_[c][s];
            Element e{static_cast<int>(c), static_cast<int>(s)};
            if (!by_label_.emplace(l, e).second)
                throw std::invalid_argument("duplicate element label '" + l + "'");
            index_to_element_.push_back(e);
            mask |= ElementSet{1} << size_;
            ++size_;
            if (size_ > 64)
                throw std::invalid_argument("ground set larger than 64 elements");
        }
        class_mask_.push_back(mask);
    }
}

Element Carrier::element(const std::string& label) const
{
    auto it = by_label_.find(label);
    if (it == by_label_.end())
        throw std::invalid_argument("unknown element label '" + label + "'");
    return it->second;
}

bool Carrier::is_nondegenerate() const
{
    for (const auto& cls : classes_)
        if (cls.size() < 2)
            return false;
    return true;
}

bool Carrier::is_uniform(int& q) const
{
    if (classes_.empty()) {
        q = 0;
        return true;
    }
    q = class_size(0);
    for (int c = 1; c < num_classes(); ++c)
        if (class_size(c) != q)
            return false;
    return true;
}

bool Carrier::is_subtransversal(ElementSet s) const
{
    if (s & ~universe_mask())
        return false;
    for (const auto& mask : class_mask_)
        if (popcount(s & mask) > 1)
            return false;
    return true;
}

bool Carrier::is_transversal(ElementSet s) const
{
    if (s & ~universe_mask())
        return false;
    for (const auto& mask : class_mask_)
        if (popcount(s & mask) != 1)
            return false;
    return true;
}

std::vector<int> Carrier::classes_met(ElementSet s) const
{
    std::vector<int> out;
    for (int c = 0; c < num_classes(); ++c)
        if (s & class_mask_[c])
            out.push_back(c);
    return out;
}

Element Carrier::element_in_class(ElementSet s, int c) const
{
    ElementSet hit = s & class_mask_[c];
    if (popcount(hit) != 1)
        throw std::logic_error("set does not meet class exactly once");
    return at_index(__builtin_ctzll(hit));
}

std::vector<ElementSet> Carrier::all_transversals() const
{
    std::vector<ElementSet> out{0};
    for (int c = 0; c < num_classes(); ++c) {
        std::vector<ElementSet> next;
        next.reserve(out.size() * classes_[c].size());
        for (ElementSet partial : out)
            for (int s = 0; s < class_size(c); ++s)
                next.push_back(partial | bit(Element{c, s}));
        out = std::move(next);
    }
    return out;
}

std::vector<ElementSet> Carrier::all_subtransversals() const
{
    std::vector<ElementSet> out{0};
    for (int c = 0; c < num_classes(); ++c) {
        std::vector<ElementSet> next;
        next.reserve(out.size() * (classes_[c].size() + 1));
        for (ElementSet partial : out) {
            next.push_back(partial);
            for (int s = 0; s < class_size(c); ++s)
                next.push_back(partial | bit(Element{c, s}));
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Element> Carrier::elements_of(ElementSet s) const
{
    std::vector<Element> out;
    while (s) {
        int i = __builtin_ctzll(s);
        out.push_back(at_index(i));
        s &= s - 1;
    }
    return out;
}

std::vector<std::string> Carrier::labels_of(ElementSet s) const
{
    std::vector<std::string> out;
    for (Element e : elements_of(s))
        out.push_back(label(e));
    return out;
}

ElementSet Carrier::set_of_labels(const std::vector<std::string>& labels) const
{
    ElementSet s = 0;
    for (const auto& l : labels)
        s |= bit(element(l));
    return s;
}

SkewClassOrdering SkewClassOrdering::without_class(int dropped) const
{
    std::vector<int> reduced;
    for (int c : order) {
        if (c == dropped)
            continue;
        reduced.push_back(c > dropped ? c - 1 : c);
    }
    return SkewClassOrdering::of(std::move(reduced));
}

} // namespace mmq

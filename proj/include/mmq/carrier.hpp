#ifndef MMQ_CARRIER_HPP
#define MMQ_CARRIER_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace mmq {

// Subsets of a carrier's ground set as bitmasks in class-major element order.
using ElementSet = std::uint64_t;

inline int popcount(ElementSet s) { return __builtin_popcountll(s); }

struct Element {
    int cls = -1;  // skew-class index
    int slot = -1; // position within the class

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.cls == b.cls && a.slot == b.slot;
    }
    friend bool operator<(const Element& a, const Element& b)
    {
        return a.cls != b.cls ? a.cls < b.cls : a.slot < b.slot;
    }
};

// A ground set partitioned into non-empty skew classes. Element labels are
// arbitrary unique strings; the global bit order is class-major.
class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::vector<std::vector<std::string>> classes);

    int num_classes() const { return static_cast<int>(classes_.size()); }
    int universe_size() const { return size_; }
    int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
    const std::vector<std::string>& class_labels(int c) const { return classes_[c]; }

    const std::string& label(Element e) const { return classes_[e.cls][e.slot]; }
    bool has_label(const std::string& l) const { return by_label_.count(l) != 0; }
    Element element(const std::string& label) const;

    int index(Element e) const { return offset_[e.cls] + e.slot; }
    Element at_index(int i) const { return index_to_element_[i]; }
    ElementSet bit(Element e) const { return ElementSet{1} << index(e); }
    ElementSet class_mask(int c) const { return class_mask_[c]; }
    ElementSet universe_mask() const
    {
        return size_ == 64 ? ~ElementSet{0} : (ElementSet{1} << size_) - 1;
    }

    bool is_nondegenerate() const;
    // True iff all classes share one size, reported through q.
    bool is_uniform(int& q) const;

    bool is_subtransversal(ElementSet s) const;
    bool is_transversal(ElementSet s) const;
    // The class indices met by s, ascending.
    std::vector<int> classes_met(ElementSet s) const;
    // Element of s in class c; requires s to meet c exactly once.
    Element element_in_class(ElementSet s, int c) const;

    std::vector<ElementSet> all_transversals() const;
    std::vector<ElementSet> all_subtransversals() const;

    std::vector<Element> elements_of(ElementSet s) const;
    std::vector<std::string> labels_of(ElementSet s) const;
    ElementSet set_of_labels(const std::vector<std::string>& labels) const;

    friend bool operator==(const Carrier& a, const Carrier& b)
    {
        return a.classes_ == b.classes_;
    }

private:
    std::vector<std::vector<std::string>> classes_;
    std::vector<int> offset_;
    std::vector<ElementSet> class_mask_;
    std::vector<Element> index_to_element_;
    std::map<std::string, Element> by_label_;
    int size_ = 0;
};

// A total order on skew classes, least first.
struct SkewClassOrdering {
    std::vector<int> order; // class indices, least first
    std::vector<int> pos;   // pos[c] = rank of class c

    static SkewClassOrdering identity(int n)
    {
        SkewClassOrdering o;
        o.order.resize(n);
        std::iota(o.order.begin(), o.order.end(), 0);
        o.pos = o.order;
        return o;
    }
    static SkewClassOrdering of(std::vector<int> order_least_first)
    {
        SkewClassOrdering o;
        o.order = std::move(order_least_first);
        o.pos.assign(o.order.size(), -1);
        for (int i = 0; i < static_cast<int>(o.order.size()); ++i)
            o.pos[o.order[i]] = i;
        return o;
    }
    bool precedes(int c1, int c2) const { return pos[c1] < pos[c2]; }
    // Ordering induced on the carrier with class `dropped` removed
    // (class indices above it shift down by one).
    SkewClassOrdering without_class(int dropped) const;
};

} // namespace mmq

#endif

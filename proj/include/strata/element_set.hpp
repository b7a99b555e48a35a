// ElementSet: a subset of the element indices [0, n) of one semigroup.

#ifndef STRATA_ELEMENT_SET_HPP_
#define STRATA_ELEMENT_SET_HPP_

#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t, uint64_t
#include <initializer_list>  // for initializer_list
#include <iterator>          // for forward_iterator_tag
#include <string>            // for string
#include <vector>            // for vector

#include <boost/dynamic_bitset.hpp>

namespace strata {

  using element_index = std::uint32_t;

  inline constexpr element_index no_element = static_cast<element_index>(-1);

  class ElementSet {
    using bits_type = boost::dynamic_bitset<std::uint64_t>;

   public:
    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = element_index;
      using difference_type   = std::ptrdiff_t;
      using pointer           = element_index const*;
      using reference         = element_index;

      const_iterator() = default;
      const_iterator(bits_type const* bits, std::size_t pos)
          : _bits(bits), _pos(pos) {}

      element_index operator*() const {
        return static_cast<element_index>(_pos);
      }

      const_iterator& operator++() {
        _pos = _bits->find_next(_pos);
        return *this;
      }

      const_iterator operator++(int) {
        auto tmp = *this;
        ++*this;
        return tmp;
      }

      bool operator==(const_iterator const& that) const {
        return _pos == that._pos;
      }

     private:
      bits_type const* _bits = nullptr;
      std::size_t      _pos  = bits_type::npos;
    };

    ElementSet() = default;

    explicit ElementSet(std::size_t universe) : _bits(universe) {}

    ElementSet(std::size_t universe, std::initializer_list<element_index> xs);

    ElementSet(std::size_t universe, std::vector<element_index> const& xs);

    static ElementSet full(std::size_t universe) {
      ElementSet result(universe);
      result._bits.set();
      return result;
    }

    std::size_t universe_size() const noexcept {
      return _bits.size();
    }

    std::size_t size() const noexcept {
      return _bits.count();
    }

    bool empty() const noexcept {
      return _bits.none();
    }

    bool contains(element_index x) const {
      return x < _bits.size() && _bits.test(x);
    }

    void insert(element_index x) {
      _bits.set(x);
    }

    void erase(element_index x) {
      _bits.reset(x);
    }

    bool is_subset_of(ElementSet const& that) const {
      return _bits.is_subset_of(that._bits);
    }

    bool intersects(ElementSet const& that) const {
      return _bits.intersects(that._bits);
    }

    // Smallest member, or no_element if empty.
    element_index first() const {
      auto pos = _bits.find_first();
      return pos == bits_type::npos ? no_element
                                    : static_cast<element_index>(pos);
    }

    ElementSet& operator|=(ElementSet const& that) {
      _bits |= that._bits;
      return *this;
    }

    ElementSet& operator&=(ElementSet const& that) {
      _bits &= that._bits;
      return *this;
    }

    ElementSet& operator-=(ElementSet const& that) {
      _bits -= that._bits;
      return *this;
    }

    friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) {
      return lhs |= rhs;
    }

    friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) {
      return lhs &= rhs;
    }

    friend ElementSet operator-(ElementSet lhs, ElementSet const& rhs) {
      return lhs -= rhs;
    }

    // Complement within the universe.
    ElementSet complement() const {
      ElementSet result(*this);
      result._bits.flip();
      return result;
    }

    friend bool operator==(ElementSet const& lhs, ElementSet const& rhs) {
      return lhs._bits == rhs._bits;
    }

    // Arbitrary strict weak order so ElementSet can key ordered containers.
    friend bool operator<(ElementSet const& lhs, ElementSet const& rhs) {
      if (lhs._bits.size() != rhs._bits.size()) {
        return lhs._bits.size() < rhs._bits.size();
      }
      return lhs._bits < rhs._bits;
    }

    const_iterator begin() const {
      return const_iterator(&_bits, _bits.find_first());
    }

    const_iterator end() const {
      return const_iterator(&_bits, bits_type::npos);
    }

    std::vector<element_index> to_vector() const;

    // "{0, 2, 3}"
    std::string to_string() const;

   private:
    bits_type _bits;
  };

}  // namespace strata

#endif  // STRATA_ELEMENT_SET_HPP_

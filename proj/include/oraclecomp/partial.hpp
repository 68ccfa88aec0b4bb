#pragma once

// Step-indexed partial values.
//
// A Partial<T> is a monotone step function from fuel to an optional value.
// Internally every probe reports the least fuel at which the value appears,
// which makes sequencing cheap: bind charges the sum of both sides' costs.
// Only the smart constructors below can build values, so monotonicity and
// determinacy hold for everything user code can construct.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>

namespace oc {

using Fuel = std::uint64_t;
using Nat = std::uint64_t;

struct Unit {
  friend bool operator==(Unit, Unit) = default;
  friend bool operator<(Unit, Unit) { return false; }
};
inline constexpr Unit star{};

template <class T>
class Partial;

namespace detail {
template <class>
struct is_partial : std::false_type {};
template <class T>
struct is_partial<Partial<T>> : std::true_type {};
template <class P>
struct partial_value;
template <class T>
struct partial_value<Partial<T>> {
  using type = T;
};
}  // namespace detail

template <class T>
class Partial {
 public:
  using value_type = T;

  struct Converged {
    T value;
    Fuel cost;  // least fuel at which the value is present
  };
  using Probe = std::function<std::optional<Converged>(Fuel)>;

  // Diverging value. Equivalent to undef<T>().
  Partial() = default;

  std::optional<Converged> probe(Fuel n) const {
    if (!probe_) return std::nullopt;
    return (*probe_)(n);
  }

  std::optional<T> eval(Fuel n) const {
    auto c = probe(n);
    if (!c) return std::nullopt;
    return std::move(c->value);
  }

  // Structurally undefined (built by undef()). A value that merely never
  // converges is not detectable.
  bool trivially_undefined() const { return !probe_; }

  static Partial ret(T v) {
    auto shared = std::make_shared<const T>(std::move(v));
    return Partial(std::make_shared<const Probe>(
        [shared](Fuel) -> std::optional<Converged> {
          return Converged{*shared, 0};
        }));
  }

  template <class F>
  auto bind(F f) const {
    using Next = std::invoke_result_t<F, const T&>;
    static_assert(detail::is_partial<Next>::value,
                  "bind continuation must return a Partial");
    using U = typename detail::partial_value<Next>::type;
    using Out = Partial<U>;
    if (!probe_) return Out();
    auto first = probe_;
    return Out(std::make_shared<const typename Out::Probe>(
        [first, f = std::move(f)](
            Fuel n) -> std::optional<typename Out::Converged> {
          auto x = (*first)(n);
          if (!x) return std::nullopt;
          auto y = f(x->value).probe(n - x->cost);
          if (!y) return std::nullopt;
          return typename Out::Converged{std::move(y->value), x->cost + y->cost};
        }));
  }

  template <class F>
  auto map(F g) const {
    using U = std::invoke_result_t<F, const T&>;
    return bind([g = std::move(g)](const T& v) { return Partial<U>::ret(g(v)); });
  }

 private:
  template <class>
  friend class Partial;
  template <class F>
  friend Partial<Nat> mu(F f);

  explicit Partial(std::shared_ptr<const Probe> p) : probe_(std::move(p)) {}

  std::shared_ptr<const Probe> probe_;
};

template <class T>
Partial<std::decay_t<T>> ret(T&& v) {
  return Partial<std::decay_t<T>>::ret(std::forward<T>(v));
}

template <class T>
Partial<T> undef() {
  return Partial<T>();
}

template <class T, class F>
auto bind(const Partial<T>& x, F f) {
  return x.bind(std::move(f));
}

// Unbounded minimisation: the least n with f(n) ⇓ true, provided f(m) ⇓ false
// for every m < n. At fuel n at most n candidates are inspected, each with
// fuel n.
template <class F>
Partial<Nat> mu(F f) {
  using Result = Partial<Nat>;
  auto fn = std::make_shared<const F>(std::move(f));
  return Result(std::make_shared<const Result::Probe>(
      [fn](Fuel n) -> std::optional<Result::Converged> {
        Fuel worst = 0;
        for (Nat i = 0; i < n; ++i) {
          Partial<bool> p = (*fn)(i);
          auto c = p.probe(n);
          if (!c) return std::nullopt;
          worst = std::max(worst, c->cost);
          if (c->value) return Result::Converged{i, std::max<Fuel>(i + 1, worst)};
        }
        return std::nullopt;
      }));
}

// Evaluation with n steps of fuel.
template <class T>
std::optional<T> eval_steps(const Partial<T>& x, Fuel n) {
  return x.eval(n);
}

}  // namespace oc

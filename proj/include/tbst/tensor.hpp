#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace tbst {

using Shape = std::vector<std::int64_t>;

std::int64_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

namespace detail {

struct Node {
  Shape shape;
  std::vector<float> data;
  std::vector<float> grad;  // allocated lazily, same length as data
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  // Reads out.grad, accumulates into parent grads. Empty for leaves and
  // constants.
  std::function<void(const Node& out)> backward;

  void ensure_grad();
};

}  // namespace detail

// Dense row-major float32 tensor with reverse-mode autodiff. A Tensor is a
// cheap shared handle; node payloads are immutable once an op has produced
// them. Every op checks its output for NaN/Inf and throws.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, float value, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<float> data,
                          bool requires_grad = false);
  static Tensor scalar(float value);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  int ndim() const;
  std::int64_t dim(int i) const;
  std::int64_t numel() const;

  bool requires_grad() const;
  void set_requires_grad(bool v);

  std::vector<float>& data();
  const std::vector<float>& data() const;
  std::vector<float>& grad();
  const std::vector<float>& grad() const;
  bool has_grad() const;

  float item() const;                       // scalar tensors only
  float at(std::int64_t i) const;           // rank-1
  float at(std::int64_t r, std::int64_t c) const;  // rank-2

  void zero_grad();
  // Reverse pass from a scalar root; seeds d(root)/d(root) = 1.
  void backward() const;

  std::shared_ptr<detail::Node> node() const { return node_; }
  static Tensor wrap(std::shared_ptr<detail::Node> node);

 private:
  std::shared_ptr<detail::Node> node_;
};

// ---- ops ----
// All binary ops require exact shape matches unless stated otherwise.

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, float s);
Tensor add_scalar(const Tensor& a, float s);

Tensor matmul(const Tensor& a, const Tensor& b);  // [m,k] x [k,n] -> [m,n]
Tensor transpose(const Tensor& a);                // rank-2

Tensor relu(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor softplus(const Tensor& a);

// Row-wise softmax, stabilized by row-max subtraction.
Tensor softmax_rows(const Tensor& a);

// x: [C_in, T], w: [C_out, C_in, 3]. Zero padding of `dilation` per side
// keeps the output length equal to T.
Tensor conv1d_dilated(const Tensor& x, const Tensor& w, int dilation);

Tensor add_colvec(const Tensor& mat, const Tensor& vec);  // vec len == rows
Tensor add_rowvec(const Tensor& mat, const Tensor& vec);  // vec len == cols

Tensor slice_cols(const Tensor& a, std::int64_t c0, std::int64_t c1);
Tensor concat_cols(const std::vector<Tensor>& parts);
Tensor stack_rows(const std::vector<Tensor>& rows);  // rank-1 xN -> [N, d]
Tensor reshape(const Tensor& a, Shape shape);
Tensor flatten(const Tensor& a);

Tensor sum(const Tensor& a);        // -> scalar
Tensor mean_rows(const Tensor& a);  // [m,n] -> [n]

Tensor layer_norm_rows(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                       float eps = 1e-5f);

// v / ||v||2 for rank-1 v; throws on (near-)zero norm.
Tensor l2_normalize(const Tensor& v);

// sqrt(sum((a-b)^2) + 1e-12) for rank-1 a, b.
Tensor euclidean_distance(const Tensor& a, const Tensor& b);

// Sum over rows of -log softmax(logits)[label]. logits: [N, C].
Tensor cross_entropy_logits(const Tensor& logits, const std::vector<int>& labels);

}  // namespace tbst

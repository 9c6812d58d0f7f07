#pragma once

#include <string>
#include <vector>

#include "poselift/matrix.hpp"
#include "poselift/rng.hpp"

namespace poselift::num {

// Named trainable tensor. `partition` groups parameters for staged training
// and checkpointing (e.g. "stage1", "heads1", "stage2", "heads2").
struct Parameter {
    std::string name;
    std::string partition;
    Matrix value;
    Matrix grad;
    bool trainable = true;
};

// Per-parameter gradient accumulator, indexable by parameter id. Worker
// threads each own one and the trainer reduces them in a fixed order.
class GradStore {
public:
    GradStore() = default;
    explicit GradStore(std::size_t n) : grads_(n) {}

    void resize(std::size_t n) { grads_.resize(n); }
    std::size_t size() const { return grads_.size(); }

    void accumulate(int id, const Matrix& g);
    const Matrix& at(int id) const { return grads_[static_cast<std::size_t>(id)]; }
    bool touched(int id) const { return !grads_[static_cast<std::size_t>(id)].empty(); }

    // Fixed-order reduction; deterministic for a fixed worker layout.
    void add_from(const GradStore& other);
    void clear();

private:
    std::vector<Matrix> grads_; // empty matrix = no contribution yet
};

class ParameterStore {
public:
    int add(const std::string& name, const std::string& partition, Matrix value,
            bool trainable = true);

    Parameter& at(int id) { return params_[static_cast<std::size_t>(id)]; }
    const Parameter& at(int id) const { return params_[static_cast<std::size_t>(id)]; }
    std::size_t count() const { return params_.size(); }

    int find(const std::string& name) const; // -1 when absent

    void zero_grad();
    // Adds store contents into Parameter::grad, skipping non-trainable entries
    // so frozen parameters always report a zero gradient.
    void apply_gradients(const GradStore& gs);

    void set_partition_trainable(const std::string& partition, bool trainable);
    std::vector<int> ids_in_partition(const std::string& partition) const;

private:
    std::vector<Parameter> params_;
};

// Uniform Glorot limit sqrt(6 / (fan_in + fan_out)); biases are zeroed by callers.
Matrix glorot_uniform(std::size_t rows, std::size_t cols, Rng& rng);

} // namespace poselift::num

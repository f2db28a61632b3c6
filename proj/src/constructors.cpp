#include "angelesco/constructors.hpp"

namespace angelesco {

template PolyW<Complex> raising_cascade<Complex>(const ModelParams<Complex>&, const MultiIndex&,
                                                 const std::vector<int>&);
template PolyW<Complex> explicit_series<Complex>(const ModelParams<Complex>&, const MultiIndex&);
template std::vector<Complex> rodrigues_grid_values<Complex>(const ModelParams<Complex>&,
                                                             const MultiIndex&, long);

}  // namespace angelesco

#include "angelesco/oracle.hpp"

namespace angelesco {

template MonicSolution<Complex> solve_monic<Complex>(const ModelParams<Complex>&,
                                                     const MultiIndex&,
                                                     const MomentTable<Complex>&);

}  // namespace angelesco

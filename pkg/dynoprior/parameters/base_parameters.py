import copy

from ..errors import ParameterError


class Parameters():
    """
    A class to store parameter values for an experiment.

    The parameter attributes are split into two main dictionaries:

    physical:       parameter values associated with the dynamical system
                    and the way it is measured, e.g. the system name,
                    overrides of its coefficients, the observed component
                    and the noise amplitude

    computational:  numerical parameter values assigned by the user,
                    e.g. step sizes, iteration counts, network widths

    Subclasses in example_parameters fill both dictionaries with the
    defaults of one experiment.  The update method only overwrites keys
    that already exist, so a typo in a config file is reported instead
    of being silently ignored.
    """
    def __init__(self):

        # empty dicts to store physical and computational parameters
        self.physical = {}
        self.computational = {}


    def update(self, par = None, val = None):
        """
        Updates the value of an existing parameter
        """

        if par is None:
            return

        if par in self.physical:
            self.physical[par] = val
        elif par in self.computational:
            self.computational[par] = val
        else:
            raise ParameterError(f'parameter {par!r} not found in dictionaries')


    def update_all(self, values):
        """
        Applies a dictionary of updates, e.g. a section of a config file
        """
        for par, val in values.items():
            self.update(par, val)


    def as_dict(self):
        """
        Returns a deep copy of both dictionaries, used when echoing the
        effective configuration into a run manifest
        """
        return {
            "physical": copy.deepcopy(self.physical),
            "computational": copy.deepcopy(self.computational)
        }

    def __getitem__(self, par):
        if par in self.physical:
            return self.physical[par]
        if par in self.computational:
            return self.computational[par]
        raise ParameterError(f'parameter {par!r} not found in dictionaries')

import numpy as np


def nyquist_sample_count(frequency, dims):
    """
    Number of samples needed to sample a dims-dimensional signal at a
    per-axis rate of frequency, i.e. frequency**dims.  Returned as a
    float since the count quickly exceeds any integer type; counts past
    the float range come back as inf.
    """
    if not frequency > 0:
        raise ValueError('frequency must be positive')
    if int(dims) != dims or dims < 1:
        raise ValueError('dims must be a positive integer')
    with np.errstate(over = 'ignore'):
        return float(np.power(float(frequency), int(dims)))


def nyquist_ratio(samples, frequency, dims):
    """
    Ratio of an available sample count to the Nyquist count
    """
    return samples / nyquist_sample_count(frequency, dims)

# gotzprop.macaulay v1.0 Oct 2026

"""
Plot of the shadow-size chain |M^k V| against the iterated Macaulay bound
"""

import datetime
import os
import sys

import numpy as np
from matplotlib.pyplot import figure, subplots_adjust, plot, axis
from matplotlib.pyplot import xlabel, ylabel, title, annotate
from matplotlib.pyplot import legend, show, savefig

import gotzprop.macaulay.config_macaulay as cfg

basename = sys.argv[0].split('/')[-1].split('.')[0]
now = datetime.datetime.now()
plotstamp = basename + '_' + str(now).split('.')[0]


def plot_growth_chain(
    sizes, bounds, n, label='', saveplot=True, show_plot=False,
    annotate_stamp=True, return_fig=False, savedir=None):
    """
    Plots |M^k V| and the k-fold up(., n-1) iterate of |V| against k

    sizes, bounds = equal-length integer sequences, k = 0, 1, ...
    label = set description for the title
    savedir = output directory (default ./output_gotzprop/)

    Returns the path of the saved plot, or the figure when return_fig.
    """
    if len(sizes) != len(bounds):
        raise ValueError('chains differ in length: %d vs %d' % (len(sizes), len(bounds)))

    k = np.arange(len(sizes))
    fig = figure()
    fig.add_subplot(111)
    subplots_adjust(bottom=0.15)
    plot(k, np.asarray(bounds, dtype=float), 'k--', lw=1,
         label=r'$\rm iterated\ bound\ h \mapsto h^{\langle %d \rangle}$' % (n - 1))
    plot(k, np.asarray(sizes, dtype=float), 'o', label=r'$|M^k V|$')
    axis(xmin=-0.2, xmax=k[-1] + 0.2)
    xlabel(r'$\rm Shadow\ step\ k$', fontsize=13)
    ylabel(r'$\rm Number\ of\ monomials$', fontsize=13)
    title('Growth of %s, n = %d' % (label or 'V', n), fontsize=12)
    legend(loc=0, fontsize=10)
    if annotate_stamp:
        annotate(plotstamp, xy=(0.70, 0.02), xycoords='figure fraction',
                 ha='left', va='center', fontsize=5)

    plotfile = None
    if saveplot:
        if savedir is None:
            savedir = os.path.join(os.getcwd(), cfg.output_dirname)
        os.makedirs(savedir, exist_ok=True)
        plotfile = os.path.join(savedir, 'growth_chain.pdf')
        savefig(plotfile)
    if show_plot:
        show()

    if return_fig:
        return fig
    return plotfile

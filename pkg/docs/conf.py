# Sphinx configuration for the entropic uncertainty toolkit documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

extensions = []
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Entropic Uncertainty Bounds'
version = '0.1'
release = '0.1'

exclude_patterns = ['_build']
pygments_style = 'sphinx'
html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'entropic_uncertaintydoc'

latex_documents = [
    ('index', 'entropic_uncertainty.tex', u'Entropic Uncertainty Bounds Documentation', u"Ankan Das", 'manual'),
]
man_pages = [
    ('index', 'entropic_uncertainty', u'Entropic Uncertainty Bounds Documentation', [u"Ankan Das"], 1),
]

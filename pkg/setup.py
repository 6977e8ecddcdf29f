from setuptools import setup

def readme():
	with open('README.rst') as f:
		return f.read()

setup(name='regmfg',
	version='0.1.0',
	description='Continuation solver and a-priori verification harness for '
		'regularized 1-D stationary mean-field games',
	long_description=readme(),
	classifiers=[
		'Development Status :: 3 - Alpha',
		'Intended Audience :: Science/Research',
		'Programming Language :: Python',
		'Programming Language :: Python :: 3',
		'Programming Language :: Python :: 3.11',
		'Topic :: Scientific/Engineering :: Mathematics'
	],
	keywords=[
		'mean-field games',
		'Hamilton-Jacobi',
		'Fokker-Planck',
		'continuation',
		'Newton method',
		'finite differences'
	],
	license='GNU GPL Version 3',
	packages=['regmfg', 'regmfg.tests'],
	python_requires='>=3.10',
	install_requires=[
		'matplotlib',
		'numpy',
		'pandas>=1.5',
		'scipy',
		'tomli; python_version < "3.11"'
	],
	extras_require={'test': ['pytest']},
	entry_points={
		'console_scripts': ['regmfg=regmfg.cli:main'],
	},
	include_package_data=True,
	zip_safe=False)

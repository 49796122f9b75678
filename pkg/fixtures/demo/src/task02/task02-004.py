import sys


def measure_weather(weather_values):
    weather_total = 0
    for x in weather_values:
        if x >= 17:
            weather_total = weather_total - x
    return weather_total


def main():
    weather_data = [int(t) for t in sys.stdin.read().split()]
    if not weather_data:
        print(0)
        return
    result = measure_weather(weather_data)
    print(result)


main()
